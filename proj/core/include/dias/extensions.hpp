#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dias/cohomology.hpp"
#include "dias/sequences.hpp"

namespace dias {

/// A central extension 0 -> A -> E -> B -> 0 realized inside E's coordinates.
struct ExtensionRecord {
  DiasAlgebra total;
  Subspace kernel;
  Matrix projection;  // dim B x dim E
  Matrix section;     // dim E x dim B
  bool central = false;
  bool stem = false;  // kernel ⊆ E' as well
  bool cover = false; // stem and dim kernel = dim H²(B, F)
};

/// E = F^m ⊕ B with (a,x)*(b,y) = (f(x,y), x*y). Kernel coordinates come
/// first. Throws NotACocycle. The multiplier dimension of B is computed
/// unless supplied.
ExtensionRecord extension_from_cocycle(const DiasAlgebra& B, const CocyclePair& c,
                                       std::optional<std::size_t> multiplier_dim = std::nullopt);

/// Whether c1 and c2 define equivalent extensions, i.e. c1 - c2 ∈ B².
bool extensions_equivalent(const DiasAlgebra& B, const CocyclePair& c1, const CocyclePair& c2);

struct Multiplier {
  std::size_t dim = 0;
  CohomologySpace space;
};

/// dim M(L) = dim H²(L, F).
Multiplier multiplier(const DiasAlgebra& L);

struct DefiningPairReport {
  bool quotient_matches = false;   // K/M has exactly L's structure constants
  bool kernel_central = false;     // M ⊆ Z(K)
  bool kernel_in_derived = false;  // M ⊆ K'
  bool within_bound = false;       // dim K ≤ n(2n+1)
  std::size_t total_dim = 0;
  std::size_t bound = 0;
  bool ok() const { return quotient_matches && kernel_central && kernel_in_derived && within_bound; }
};

DefiningPairReport certify_defining_pair(const DiasAlgebra& L, const ExtensionRecord& e);

struct Cover {
  ExtensionRecord extension;
  DefiningPairReport report;
  std::size_t multiplier_dim = 0;
};

/// K = F^d ⊕ L from the d representatives of H²(L, F) stacked into one
/// F^d-valued cocycle. Throws CoverCertificationFailed if a defining-pair
/// check fails.
Cover construct_cover(const DiasAlgebra& L);
/// Same construction from an explicit list of cocycles; they must be
/// independent modulo B² and as many as dim H²(L, F).
Cover construct_cover(const DiasAlgebra& L, const std::vector<CocyclePair>& classes);

/// Z*(L): the image of the center of a stem extension (here: the cover).
Subspace z_star(const DiasAlgebra& L);
bool is_unicentral(const DiasAlgebra& L);

struct Theorem49Report {
  bool delta_zero = false;
  bool inf2_surjective = false;
  bool multiplier_identity = false;  // dim M(L) = dim M(L/Z) - dim(L' ∩ Z)
  bool inside_z_star = false;        // Z ⊆ Z*(L)
  std::size_t multiplier_dim = 0;
  std::size_t quotient_multiplier_dim = 0;
  std::size_t derived_meet_dim = 0;
  bool agree() const {
    return delta_zero == inf2_surjective && inf2_surjective == multiplier_identity &&
           multiplier_identity == inside_z_star;
  }
};

/// Evaluates the four conditions along separate code paths. Throws
/// NotCentralIdeal.
Theorem49Report theorem49_report(const DiasAlgebra& L, const Subspace& Z);

/// Tail of M(L) -> M(L/Z) -> Z -> L/L' -> L/(Z+L') -> 0 checked exactly, head
/// through the transgression rank.
SequenceReport verify_stallings(const DiasAlgebra& L, const Subspace& Z);

struct StemCenterReport {
  Subspace first;    // ψ(Z(E)) for the canonical cover
  Subspace second;   // ψ(Z(E)) for a cover built from another class basis
  Subspace center;   // Z(L)
  bool distinct_extensions = false;
  bool unicentral = false;
  bool equal() const { return first == second; }
  /// ψ(Z(E)) = Z(L); only required when L is unicentral.
  bool onto_center() const { return first == center; }
  bool ok() const { return equal() && (!unicentral || onto_center()); }
};

/// Builds two covers, the second from representatives chosen with reversed
/// pivot order and shifted by seeded coboundaries, and compares the images
/// of their centers.
StemCenterReport stem_center_projection(const DiasAlgebra& L, std::uint64_t seed = 1);

}  // namespace dias
