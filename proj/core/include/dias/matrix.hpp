#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dias/field.hpp"

namespace dias {

class Subspace;

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  /// Every row must have `cols` entries over `f`; throws ShapeError or
  /// FieldMismatch otherwise.
  static Matrix from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols);
  /// Convenience for tests and catalogs: integer entries.
  static Matrix from_ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Checked assignment: FieldMismatch if the scalar lives elsewhere.
  void set(std::size_t i, std::size_t j, Scalar v);

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  bool is_zero() const;

  /// Stack rows of `below` under this matrix.
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;

  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const Scalar> v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Scalar& s);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Scalar& s);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

/// One nonzero entry of a sparse row.
struct SparseEntry {
  std::size_t col;
  Scalar value;
};
using SparseRow = std::vector<SparseEntry>;

SparseRow to_sparse(std::span<const Scalar> v);

/// Incremental Gauss-Jordan elimination over sparse rows.
///
/// The stored rows are always fully reduced: each pivot column holds a single
/// 1 and zeros in every other stored row. Inserting a row reduces it against
/// the current pivots, normalizes it, and clears its pivot column from the
/// rows already present, so the structure is in RREF after every call.
class Echelon {
 public:
  Echelon(const FieldSpec& f, std::size_t cols);

  const FieldSpec& field() const { return field_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true when the row was independent of the stored ones.
  bool insert(SparseRow row);
  bool insert(std::span<const Scalar> row) { return insert(to_sparse(row)); }

  /// Remainder of `row` after elimination by the stored pivots.
  SparseRow reduce(SparseRow row) const;
  bool in_span(std::span<const Scalar> row) const { return reduce(to_sparse(row)).empty(); }

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  /// Stored rows ordered by pivot column: the canonical RREF.
  Matrix to_matrix() const;

 private:
  SparseRow reduce_impl(SparseRow row) const;

  FieldSpec field_;
  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::size_t> pivot_of_col_;  // npos when column is free
  mutable std::vector<Scalar> scratch_;
  mutable std::vector<char> touched_;
};

struct RrefResult {
  Matrix reduced;  // nonzero rows only
  std::vector<std::size_t> pivots;
};

/// Canonical reduced row-echelon form; throws FieldMismatch on mixed entries.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Null space {v : m v = 0} inside F^cols.
Subspace kernel(const Matrix& m);
/// Null space of the row system stored in an echelon.
Subspace kernel(const Echelon& e);
/// Column space inside F^rows.
Subspace image(const Matrix& m);
/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

}  // namespace dias
