#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dias/matrix.hpp"

namespace dias {

/// A subspace of F^n in canonical form: the basis matrix is in reduced
/// row-echelon form, so two subspaces are equal iff their bases are identical.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(const FieldSpec& f, std::size_t n);
  static Subspace full(const FieldSpec& f, std::size_t n);
  static Subspace span(const FieldSpec& f, std::size_t n, const std::vector<Vector>& gens);
  /// Row space of `rows`; its column count must equal n.
  static Subspace from_matrix(const FieldSpec& f, std::size_t n, const Matrix& rows);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == n_; }

  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const;

  bool contains(std::span<const Scalar> v) const;
  /// Coordinates of v in the RREF basis, or nullopt if v lies outside.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  /// Σ coords[i] * basis[i].
  Vector combine(std::span<const Scalar> coords) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// True iff inner ⊆ outer.
bool subspace_contains(const Subspace& outer, const Subspace& inner);

/// A canonical complement of `a` inside `b`: the rows of b are reduced modulo
/// the echelon basis of a and the remainders are brought to RREF. The
/// complement's pivots are the pivots of b that a does not already own,
/// taken lowest index first. Throws NotContained unless a ⊆ b.
Subspace complement(const Subspace& a, const Subspace& b);

/// Same rule, but pivots are searched in `column_order` instead of 0..n-1.
/// The result is returned in canonical form for the original coordinates.
Subspace complement(const Subspace& a, const Subspace& b,
                    std::span<const std::size_t> column_order);

}  // namespace dias
