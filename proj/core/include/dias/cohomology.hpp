#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dias/algebra.hpp"

namespace dias {

/// A pair (f⊣, f⊢) of bilinear maps B x B -> F^m. Each map is a (n*n) x m
/// matrix whose row i*n + j holds the coordinates of f(x_i, x_j).
///
/// The flat coordinate vector used for Z², B² and H² has length 2 n² m:
/// all f⊣ entries first (row-major), then all f⊢ entries.
struct CocyclePair {
  FieldSpec field;
  std::size_t base_dim = 0;
  std::size_t coeff_dim = 0;
  Matrix left;
  Matrix right;

  static CocyclePair zero(const FieldSpec& f, std::size_t n, std::size_t m);
  static CocyclePair from_coordinates(const FieldSpec& f, std::size_t n, std::size_t m,
                                      std::span<const Scalar> flat);

  const Matrix& map(Product p) const { return p == Product::left ? left : right; }
  Matrix& map(Product p) { return p == Product::left ? left : right; }
  Vector coordinates() const;
  /// f_p(x_i, x_j) in F^m.
  Vector value(Product p, std::size_t i, std::size_t j) const;
  /// f_p(x, y) for arbitrary coordinate vectors.
  Vector evaluate(Product p, std::span<const Scalar> x, std::span<const Scalar> y) const;

  friend bool operator==(const CocyclePair&, const CocyclePair&) = default;
};

/// Position of f_p(x_i, x_j)_a in the flat coordinate vector.
std::size_t cochain_index(Product p, std::size_t n, std::size_t m, std::size_t i, std::size_t j,
                          std::size_t a);

/// Central factor-system axioms, for all i, j, k in the base:
///   C1  f⊣(i, j⊣k) = f⊣(i, j⊢k)
///   C2  f⊣(i⊢j, k) = f⊢(i, j⊣k)
///   C3  f⊢(i⊣j, k) = f⊢(i⊢j, k)
///   C4  f⊣(i, j⊣k) = f⊣(i⊣j, k)
///   C5  f⊢(i, j⊢k) = f⊢(i⊢j, k)
/// They are exactly the conditions for A ⊕ B with
/// (a,x) * (b,y) = (f(x,y), x*y) to be diassociative.
bool satisfies_cocycle_axioms(const DiasAlgebra& B, const CocyclePair& c);

/// Rank of the linear system C1-C5 in the 2 n² m unknowns.
std::size_t cocycle_constraint_rank(const DiasAlgebra& B, std::size_t m);

/// Z²(B, F^m).
Subspace cocycle_space(const DiasAlgebra& B, std::size_t m);
/// B²(B, F^m): the image of ε ↦ (-ε∘⊣, -ε∘⊢).
Subspace coboundary_space(const DiasAlgebra& B, std::size_t m);
/// The coboundary of ε, given as an n x m matrix whose row l is ε(x_l).
CocyclePair coboundary_of(const DiasAlgebra& B, const Matrix& epsilon);

/// Z², B² and a chosen basis of representatives for H² = Z²/B².
class CohomologySpace {
 public:
  CohomologySpace() = default;
  CohomologySpace(const FieldSpec& f, std::size_t base_dim, std::size_t coeff_dim,
                  Subspace cocycles, Subspace coboundaries, Subspace representatives);

  const FieldSpec& field() const { return field_; }
  std::size_t base_dim() const { return base_dim_; }
  std::size_t coeff_dim() const { return coeff_dim_; }
  const Subspace& cocycles() const { return cocycles_; }
  const Subspace& coboundaries() const { return coboundaries_; }
  /// Span of the representatives; a complement of B² in Z².
  const Subspace& representative_span() const { return reps_space_; }
  const std::vector<CocyclePair>& reps() const { return reps_; }
  std::size_t dim() const { return reps_.size(); }

 private:
  FieldSpec field_;
  std::size_t base_dim_ = 0;
  std::size_t coeff_dim_ = 0;
  Subspace cocycles_;
  Subspace coboundaries_;
  Subspace reps_space_;
  std::vector<CocyclePair> reps_;
};

/// H²(B, F^m) with representatives from the canonical complement of B² in Z².
CohomologySpace h2(const DiasAlgebra& B, std::size_t m);
/// Same, with the complement's pivots searched in `column_order`.
CohomologySpace h2(const DiasAlgebra& B, std::size_t m, std::span<const std::size_t> column_order);

/// Coordinates of the class of c in the representative basis. Zero exactly
/// for coboundaries. Throws NotACocycle when c ∉ Z².
Vector class_coordinates(const CohomologySpace& H, const CocyclePair& c);

/// Hom(L, F^m) for a central module: linear maps vanishing on L'. Vectors
/// have length n*m with entry i*m + a holding φ(x_i)_a.
Subspace hom_space(const DiasAlgebra& L, std::size_t m);

/// χ∘f for a linear map χ: F^m -> F^k given as a k x m matrix.
CocyclePair compose(const Matrix& chi, const CocyclePair& c);

/// (x, y) ↦ f(φx, φy) where φ is a dim(target base) x dim(new base) matrix.
CocyclePair pullback(const CocyclePair& c, const Matrix& phi);

struct ExtensionCocycle {
  Quotient quotient;
  CocyclePair cocycle;  // in Z²(L/H, H), values in H's echelon coordinates
};

/// f(x̄, ȳ) = μ(x̄)*μ(ȳ) - μ(x̄*ȳ) for the canonical section μ of L -> L/H.
/// Throws NotCentralIdeal.
ExtensionCocycle extension_cocycle_data(const DiasAlgebra& L, const Subspace& H);
CocyclePair extension_cocycle(const DiasAlgebra& L, const Subspace& H);

}  // namespace dias
