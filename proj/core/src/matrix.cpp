#include "dias/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "dias/errors.hpp"
#include "dias/subspace.hpp"

namespace dias {

namespace {

constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

// x - b * y for sorted sparse rows.
SparseRow merge_sub(const SparseRow& x, const Scalar& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].col < y[j].col)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].col < x[i].col) {
      Scalar v = Scalar::zero(b.field());
      v.sub_mul(b, y[j].value);
      out.push_back({y[j].col, std::move(v)});
      ++j;
    } else {
      Scalar v = x[i].value;
      v.sub_mul(b, y[j].value);
      if (!v.is_zero()) out.push_back({x[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_entries(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& s : m.row(i)) {
      if (!(s.field() == m.field())) {
        throw FieldMismatch("matrix over " + m.field().name() + " holds an entry over " +
                            s.field().name());
      }
    }
  }
}

}  // namespace

Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeError("column length does not match row count");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Scalar::from_int(f, rows[i][j]);
  }
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
  if (!(v.field() == field_)) {
    throw FieldMismatch("cannot store a " + v.field().name() + " scalar in a " + field_.name() +
                        " matrix");
  }
  if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
  data_[i * cols_ + j] = std::move(v);
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (below.cols_ != cols_) throw ShapeError("vstack: column counts differ");
  if (!(below.field_ == field_)) throw FieldMismatch("vstack: fields differ");
  Matrix m = *this;
  m.rows_ += below.rows_;
  m.data_.insert(m.data_.end(), below.data_.begin(), below.data_.end());
  return m;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (right.rows_ != rows_) throw ShapeError("hstack: row counts differ");
  if (!(right.field_ == field_)) throw FieldMismatch("hstack: fields differ");
  Matrix m(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
  }
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  if (!(a.field() == b.field())) throw FieldMismatch("matrix product over different fields");
  Matrix c(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, std::span<const Scalar> v) {
  if (a.cols() != v.size()) throw ShapeError("matrix-vector product: dimensions differ");
  Vector out = zero_vector(a.field(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum: shapes differ");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  }
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("matrix difference: shapes differ");
  }
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  }
  return c;
}

Matrix scale(const Matrix& a, const Scalar& s) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  }
  return c;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector sum: lengths differ");
  Vector c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector difference: lengths differ");
  Vector c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

Vector scale(const Vector& a, const Scalar& s) {
  Vector c = a;
  for (auto& x : c) x *= s;
  return c;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw ShapeError("dot: lengths differ");
  if (a.empty()) return Scalar{};
  Scalar acc = Scalar::zero(a.front().field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

SparseRow to_sparse(std::span<const Scalar> v) {
  SparseRow out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Echelon

Echelon::Echelon(const FieldSpec& f, std::size_t cols)
    : field_(f),
      cols_(cols),
      pivot_of_col_(cols, kNoPivot),
      scratch_(cols, Scalar::zero(f)),
      touched_(cols, 0) {}

SparseRow Echelon::reduce_impl(SparseRow row) const {
  if (row.empty() || rows_.empty()) return row;
  std::vector<std::size_t> hits;
  for (const auto& e : row) {
    if (e.col >= cols_) throw ShapeError("row entry beyond echelon width");
    if (!(e.value.field() == field_)) throw FieldMismatch("row over a different field");
    if (pivot_of_col_[e.col] != kNoPivot) hits.push_back(e.col);
  }
  if (hits.empty()) return row;
  std::vector<std::size_t> touched;
  touched.reserve(row.size() * 2);
  for (auto& e : row) {
    scratch_[e.col] = std::move(e.value);
    touched_[e.col] = 1;
    touched.push_back(e.col);
  }
  // Stored rows are fully reduced, so clearing one pivot column never disturbs
  // the value sitting in another pivot column.
  for (std::size_t c : hits) {
    Scalar a = scratch_[c];
    if (a.is_zero()) continue;
    for (const auto& e : rows_[pivot_of_col_[c]]) {
      if (!touched_[e.col]) {
        touched_[e.col] = 1;
        touched.push_back(e.col);
      }
      scratch_[e.col].sub_mul(a, e.value);
    }
  }
  std::sort(touched.begin(), touched.end());
  SparseRow out;
  for (std::size_t c : touched) {
    if (!scratch_[c].is_zero()) out.push_back({c, scratch_[c]});
    scratch_[c] = Scalar::zero(field_);
    touched_[c] = 0;
  }
  return out;
}

SparseRow Echelon::reduce(SparseRow row) const {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  return reduce_impl(std::move(row));
}

bool Echelon::insert(SparseRow row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  SparseRow r = reduce_impl(std::move(row));
  if (r.empty()) return false;
  const std::size_t pivot = r.front().col;
  if (!r.front().value.is_one()) {
    Scalar inv = r.front().value.inverse();
    for (auto& e : r) e.value *= inv;
  }
  for (auto& stored : rows_) {
    auto it = std::lower_bound(stored.begin(), stored.end(), pivot,
                               [](const SparseEntry& e, std::size_t c) { return e.col < c; });
    if (it == stored.end() || it->col != pivot) continue;
    Scalar b = it->value;
    stored = merge_sub(stored, b, r);
  }
  pivot_of_col_[pivot] = rows_.size();
  rows_.push_back(std::move(r));
  return true;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_of_col_[c] != kNoPivot) out.push_back(c);
  }
  return out;
}

Matrix Echelon::to_matrix() const {
  Matrix m(field_, rows_.size(), cols_);
  std::size_t i = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (pivot_of_col_[c] == kNoPivot) continue;
    for (const auto& e : rows_[pivot_of_col_[c]]) m(i, e.col) = e.value;
    ++i;
  }
  return m;
}

// ---------------------------------------------------------------------------

RrefResult rref(const Matrix& m) {
  check_entries(m);
  Echelon e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return {e.to_matrix(), e.pivots()};
}

std::size_t rank(const Matrix& m) {
  check_entries(m);
  Echelon e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

Subspace kernel(const Echelon& e) {
  const Matrix reduced = e.to_matrix();
  const auto pivots = e.pivots();
  const std::size_t n = e.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(e.field(), n, f);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!reduced(r, f).is_zero()) v[pivots[r]] = -reduced(r, f);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(e.field(), n, gens);
}

Subspace kernel(const Matrix& m) {
  check_entries(m);
  Echelon e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return kernel(e);
}

Subspace image(const Matrix& m) {
  Matrix t = m.transpose();
  return Subspace::from_matrix(t.field(), m.rows(), t);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side has wrong length");
  Matrix rhs(m.field(), m.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs.set(i, 0, b[i]);
  auto [reduced, pivots] = rref(m.hstack(rhs));
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == m.cols()) return std::nullopt;
    x[pivots[r]] = reduced(r, m.cols());
  }
  return x;
}

}  // namespace dias
