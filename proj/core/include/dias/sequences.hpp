#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dias/cohomology.hpp"

namespace dias {

struct SequenceNode {
  std::string name;
  Matrix map;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
};

struct ExactnessVerdict {
  std::string at;      // object where exactness is checked
  std::string claim;   // e.g. "ker Res = im Inf1"
  bool holds = false;
};

struct SequenceReport {
  std::vector<SequenceNode> nodes;
  std::vector<ExactnessVerdict> verdicts;
  bool exact() const;
};

SequenceNode make_node(std::string name, Matrix map);

/// The low-degree sequence of a central ideal H in L, with coefficients in F:
///
///   0 -> Hom(L/H) -Inf1-> Hom(L) -Res-> Hom(H) -Tra-> H²(L/H) -Inf2-> H²(L) -δ-> (L/L'⊗H ⊕ H⊗L/L')²
///
/// Bases: Hom spaces use the echelon bases of hom_space (Hom(H) uses the
/// dual of H's echelon basis), H² spaces use their representative classes,
/// and the δ target is ordered (f⊣'', g⊣'', f⊢'', g⊢'').
class LowDegreeSequence {
 public:
  /// Throws NotCentralIdeal. `h2_total` may be passed in to avoid recomputing H²(L, F).
  LowDegreeSequence(const DiasAlgebra& L, const Subspace& H,
                    std::optional<CohomologySpace> h2_total = std::nullopt);

  const Quotient& quotient() const { return ext_.quotient; }
  const CocyclePair& extension_cocycle() const { return ext_.cocycle; }
  const Subspace& hom_total() const { return hom_total_; }
  const Subspace& hom_quotient() const { return hom_quotient_; }
  const CohomologySpace& h2_total() const { return h2_total_; }
  const CohomologySpace& h2_quotient() const { return h2_quotient_; }

  const Matrix& inf1() const { return inf1_; }
  const Matrix& res() const { return res_; }
  const Matrix& tra() const { return tra_; }
  const Matrix& inf2() const { return inf2_; }
  const Matrix& delta() const { return delta_; }

  /// Inf1 injective, ker Res = im Inf1, ker Tra = im Res, ker Inf2 = im Tra,
  /// ker δ = im Inf2.
  SequenceReport verify() const;

 private:
  Subspace ideal_;
  ExtensionCocycle ext_;
  Subspace hom_total_;
  Subspace hom_quotient_;
  CohomologySpace h2_total_;
  CohomologySpace h2_quotient_;
  Matrix inf1_, res_, tra_, inf2_, delta_;
};

Matrix inf1(const DiasAlgebra& L, const Subspace& H);
Matrix res(const DiasAlgebra& L, const Subspace& H);
Matrix tra(const DiasAlgebra& L, const Subspace& H);
Matrix inf2(const DiasAlgebra& L, const Subspace& H);

/// δ: H²(L, F) -> (L/L'⊗Z ⊕ Z⊗L/L')², one column per representative of
/// `h2_total`. L/L' uses the standard vectors off the pivots of L', Z its
/// echelon basis. Throws NotCentralIdeal; throws std::logic_error if a
/// representative fails to vanish on L' x Z or Z x L'.
Matrix delta_map(const DiasAlgebra& L, const Subspace& Z, const CohomologySpace& h2_total);
Matrix delta_map(const DiasAlgebra& L, const Subspace& Z);

SequenceReport verify_five_term(const DiasAlgebra& L, const Subspace& H);

}  // namespace dias
