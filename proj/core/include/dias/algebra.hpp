#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dias/matrix.hpp"
#include "dias/subspace.hpp"

namespace dias {

/// The two products of a diassociative algebra: ⊣ (left) and ⊢ (right).
enum class Product { left, right };

inline constexpr std::array<Product, 2> kProducts = {Product::left, Product::right};

const char* product_symbol(Product p);

/// Structure constants c[i][j][k] with x_i * x_j = Σ_k c[i][j][k] x_k,
/// stored flat at (i*n + j)*n + k.
class StructureTensor {
 public:
  StructureTensor() = default;
  StructureTensor(const FieldSpec& f, std::size_t n);

  std::size_t dim() const { return n_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, Scalar v);

  /// x_i * x_j as a coordinate vector.
  Vector basis_product(std::size_t i, std::size_t j) const;
  /// Nonzero entries of x_i * x_j.
  const SparseRow& sparse_product(std::size_t i, std::size_t j) const {
    return sparse_[i * n_ + j];
  }
  bool is_zero() const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  FieldSpec field_;
  std::size_t n_ = 0;
  std::vector<Scalar> c_;
  std::vector<SparseRow> sparse_;
};

/// A finite-dimensional algebra with two bilinear products given by
/// structure constants. Construction does not check the diassociative
/// identities; use validate_axioms for that.
class DiasAlgebra {
 public:
  DiasAlgebra() = default;
  DiasAlgebra(const FieldSpec& f, std::size_t n);
  DiasAlgebra(StructureTensor left, StructureTensor right, std::vector<std::string> labels = {});

  const FieldSpec& field() const { return left_.field(); }
  std::size_t dim() const { return left_.dim(); }
  const StructureTensor& tensor(Product p) const { return p == Product::left ? left_ : right_; }
  StructureTensor& tensor(Product p) { return p == Product::left ? left_ : right_; }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(std::size_t i) const;

  /// Bilinear extension of the basis products.
  Vector multiply(Product p, std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// x_i * v for a coordinate vector v.
  Vector multiply_basis_left(Product p, std::size_t i, std::span<const Scalar> v) const;
  /// v * x_j.
  Vector multiply_basis_right(Product p, std::span<const Scalar> v, std::size_t j) const;

  friend bool operator==(const DiasAlgebra& a, const DiasAlgebra& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  StructureTensor left_;
  StructureTensor right_;
  std::vector<std::string> labels_;
};

/// The five defining identities, checked on basis triples.
enum class Axiom {
  left_associative,   // (x⊣y)⊣z = x⊣(y⊣z)
  right_associative,  // (x⊢y)⊢z = x⊢(y⊢z)
  left_absorbs,       // x⊣(y⊣z) = x⊣(y⊢z)
  middle,             // (x⊢y)⊣z = x⊢(y⊣z)
  right_absorbs,      // (x⊣y)⊢z = (x⊢y)⊢z
};

inline constexpr std::array<Axiom, 5> kAxioms = {Axiom::left_associative, Axiom::right_associative,
                                                 Axiom::left_absorbs, Axiom::middle,
                                                 Axiom::right_absorbs};

const char* axiom_name(Axiom a);
const char* axiom_identity(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::size_t i, j, k;
  Vector residual;  // lhs - rhs
};

struct ValidationReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
  std::size_t count(Axiom a) const;
};

/// Checks all five identities on every basis triple; by trilinearity this is
/// a complete check. Collects at most `max_violations` witnesses (0 = all).
ValidationReport validate_axioms(const DiasAlgebra& L, std::size_t max_violations = 0);

/// Residual lhs - rhs of one identity on the basis triple (i, j, k).
Vector axiom_residual(const DiasAlgebra& L, Axiom a, std::size_t i, std::size_t j, std::size_t k);

/// A◊B = A⊣B + A⊢B.
Subspace box_product(const DiasAlgebra& L, const Subspace& a, const Subspace& b);
/// L' = L◊L.
Subspace derived_subalgebra(const DiasAlgebra& L);
/// Two-sided annihilator under both products.
Subspace center(const DiasAlgebra& L);

bool is_ideal(const DiasAlgebra& L, const Subspace& I);
bool is_central_ideal(const DiasAlgebra& L, const Subspace& I);

struct Quotient {
  DiasAlgebra algebra;
  Matrix projection;  // dim(L/I) x dim L
  Matrix section;     // dim L x dim(L/I); projection * section = identity
  Subspace ideal;
};

/// L/I with basis the standard vectors off I's pivot columns, i.e. the
/// canonical complement of I in L. Throws NotIdeal.
Quotient quotient_algebra(const DiasAlgebra& L, const Subspace& I);

/// Block-diagonal structure constants, L1 coordinates first.
DiasAlgebra direct_sum(const DiasAlgebra& a, const DiasAlgebra& b);

struct AlgebraMorphismCheck {
  DiasAlgebra source;
  DiasAlgebra target;
  Matrix matrix;  // dim target x dim source
};

/// φ(x_i * x_j) = φ(x_i) * φ(x_j) for every basis pair and both products.
bool check_homomorphism(const AlgebraMorphismCheck& m);
bool check_homomorphism(const DiasAlgebra& source, const DiasAlgebra& target, const Matrix& phi);

/// Image of a subspace under a linear map given by a matrix.
Subspace map_subspace(const Matrix& phi, const Subspace& s);

}  // namespace dias
