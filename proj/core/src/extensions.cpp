#include "dias/extensions.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dias/errors.hpp"

namespace dias {

ExtensionRecord extension_from_cocycle(const DiasAlgebra& B, const CocyclePair& c,
                                       std::optional<std::size_t> multiplier_dim) {
  if (c.base_dim != B.dim()) throw ShapeError("extension_from_cocycle: cochain base dimension");
  if (!satisfies_cocycle_axioms(B, c)) throw NotACocycle("extension_from_cocycle: not a 2-cocycle");
  const FieldSpec& f = B.field();
  const std::size_t n = B.dim();
  const std::size_t m = c.coeff_dim;
  const std::size_t total = m + n;

  StructureTensor left(f, total);
  StructureTensor right(f, total);
  for (Product p : kProducts) {
    auto& t = p == Product::left ? left : right;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t a = 0; a < m; ++a) {
          const Scalar& v = c.map(p)(i * n + j, a);
          if (!v.is_zero()) t.set(m + i, m + j, a, v);
        }
        for (const auto& e : B.tensor(p).sparse_product(i, j)) t.set(m + i, m + j, m + e.col, e.value);
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < m; ++a) labels.push_back("a" + std::to_string(a));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(B.label(i));

  ExtensionRecord e;
  e.total = DiasAlgebra(std::move(left), std::move(right), std::move(labels));
  std::vector<Vector> gens;
  for (std::size_t a = 0; a < m; ++a) gens.push_back(unit_vector(f, total, a));
  e.kernel = Subspace::span(f, total, gens);
  e.projection = Matrix(f, n, total);
  e.section = Matrix(f, total, n);
  for (std::size_t i = 0; i < n; ++i) {
    e.projection(i, m + i) = Scalar::one(f);
    e.section(m + i, i) = Scalar::one(f);
  }
  e.central = subspace_contains(center(e.total), e.kernel);
  e.stem = e.central && subspace_contains(derived_subalgebra(e.total), e.kernel);
  if (e.stem) {
    const std::size_t d = multiplier_dim ? *multiplier_dim : h2(B, 1).dim();
    e.cover = m == d;
  }
  return e;
}

bool extensions_equivalent(const DiasAlgebra& B, const CocyclePair& c1, const CocyclePair& c2) {
  if (c1.coeff_dim != c2.coeff_dim) throw ShapeError("extensions_equivalent: coefficient dimensions differ");
  if (!satisfies_cocycle_axioms(B, c1) || !satisfies_cocycle_axioms(B, c2)) {
    throw NotACocycle("extensions_equivalent: input is not a 2-cocycle");
  }
  Vector diff = c1.coordinates() - c2.coordinates();
  return coboundary_space(B, c1.coeff_dim).contains(diff);
}

Multiplier multiplier(const DiasAlgebra& L) {
  Multiplier m;
  m.space = h2(L, 1);
  m.dim = m.space.dim();
  return m;
}

DefiningPairReport certify_defining_pair(const DiasAlgebra& L, const ExtensionRecord& e) {
  DefiningPairReport r;
  const std::size_t n = L.dim();
  r.total_dim = e.total.dim();
  r.bound = n * (2 * n + 1);
  r.within_bound = r.total_dim <= r.bound;
  Quotient q = quotient_algebra(e.total, e.kernel);
  r.quotient_matches = q.algebra == L && q.projection == e.projection;
  r.kernel_central = subspace_contains(center(e.total), e.kernel);
  r.kernel_in_derived = subspace_contains(derived_subalgebra(e.total), e.kernel);
  return r;
}

namespace {

CocyclePair stack(const DiasAlgebra& L, const std::vector<CocyclePair>& classes) {
  const std::size_t n = L.dim();
  CocyclePair c = CocyclePair::zero(L.field(), n, classes.size());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].base_dim != n || classes[k].coeff_dim != 1) {
      throw ShapeError("construct_cover: classes must be F-valued cocycles on L");
    }
    for (Product p : kProducts) {
      for (std::size_t r = 0; r < n * n; ++r) c.map(p)(r, k) = classes[k].map(p)(r, 0);
    }
  }
  return c;
}

std::string describe(const DefiningPairReport& r) {
  std::string s;
  if (!r.quotient_matches) s += " quotient";
  if (!r.kernel_central) s += " central";
  if (!r.kernel_in_derived) s += " derived";
  if (!r.within_bound) s += " bound";
  return s;
}

Cover finish_cover(const DiasAlgebra& L, const std::vector<CocyclePair>& classes, std::size_t d) {
  Cover cover;
  cover.multiplier_dim = d;
  cover.extension = extension_from_cocycle(L, stack(L, classes), d);
  cover.report = certify_defining_pair(L, cover.extension);
  if (!cover.report.ok() || !cover.extension.cover) {
    throw CoverCertificationFailed("cover certification failed:" + describe(cover.report));
  }
  return cover;
}

}  // namespace

Cover construct_cover(const DiasAlgebra& L) {
  CohomologySpace h = h2(L, 1);
  return finish_cover(L, h.reps(), h.dim());
}

Cover construct_cover(const DiasAlgebra& L, const std::vector<CocyclePair>& classes) {
  return finish_cover(L, classes, h2(L, 1).dim());
}

Subspace z_star(const DiasAlgebra& L) {
  Cover c = construct_cover(L);
  return map_subspace(c.extension.projection, center(c.extension.total));
}

bool is_unicentral(const DiasAlgebra& L) { return z_star(L) == center(L); }

Theorem49Report theorem49_report(const DiasAlgebra& L, const Subspace& Z) {
  if (!is_central_ideal(L, Z)) throw NotCentralIdeal("theorem49_report: not a central ideal");
  LowDegreeSequence seq(L, Z);
  Theorem49Report r;
  r.multiplier_dim = seq.h2_total().dim();
  r.quotient_multiplier_dim = seq.h2_quotient().dim();
  r.derived_meet_dim = subspace_intersect(derived_subalgebra(L), Z).dim();
  r.delta_zero = seq.delta().is_zero();
  r.inf2_surjective = rank(seq.inf2()) == r.multiplier_dim;
  r.multiplier_identity = r.multiplier_dim + r.derived_meet_dim == r.quotient_multiplier_dim;
  r.inside_z_star = subspace_contains(z_star(L), Z);
  return r;
}

SequenceReport verify_stallings(const DiasAlgebra& L, const Subspace& Z) {
  if (!is_central_ideal(L, Z)) throw NotCentralIdeal("verify_stallings: not a central ideal");
  const FieldSpec& f = L.field();
  LowDegreeSequence seq(L, Z);
  const Subspace derived = derived_subalgebra(L);
  const Quotient abel = quotient_algebra(L, derived);
  const Quotient top = quotient_algebra(L, subspace_sum(Z, derived));

  // M(L/Z) -> Z is the dual of Tra under Hom(Z, F)* = Z.
  Matrix ganea = seq.tra().transpose();
  std::vector<Vector> cols;
  for (std::size_t s = 0; s < Z.dim(); ++s) cols.push_back(abel.projection * Z.basis().row(s));
  Matrix z_to_abel = Matrix::from_columns(f, abel.algebra.dim(), cols);
  Matrix abel_to_top = top.projection * abel.section;

  const Subspace meet = subspace_intersect(Z, derived);
  std::vector<Vector> meet_coords;
  for (std::size_t r = 0; r < meet.dim(); ++r) meet_coords.push_back(*Z.coordinates(meet.basis().row(r)));
  const Subspace meet_in_z = Subspace::span(f, Z.dim(), meet_coords);

  SequenceReport report;
  report.nodes.push_back(make_node("Inf2", seq.inf2()));
  report.nodes.push_back(make_node("M(L/Z)->Z", ganea));
  report.nodes.push_back(make_node("Z->L/L'", z_to_abel));
  report.nodes.push_back(make_node("L/L'->L/(Z+L')", abel_to_top));
  const auto& nodes = report.nodes;

  report.verdicts.push_back({"M(L/Z)", "rank Inf2 = dim M(L/Z) - rank Tra",
                             nodes[0].rank + nodes[1].rank == seq.h2_quotient().dim()});
  report.verdicts.push_back({"L'∩Z", "im(M(L/Z)->Z) = L'∩Z", image(ganea) == meet_in_z});
  report.verdicts.push_back(
      {"Z", "ker(Z->L/L') = im(M(L/Z)->Z)", kernel(z_to_abel) == image(ganea)});
  report.verdicts.push_back(
      {"L/L'", "ker(L/L'->L/(Z+L')) = im(Z->L/L')", kernel(abel_to_top) == image(z_to_abel)});
  report.verdicts.push_back(
      {"L/(Z+L')", "L/L'->L/(Z+L') surjective", nodes[3].rank == top.algebra.dim()});
  return report;
}

StemCenterReport stem_center_projection(const DiasAlgebra& L, std::uint64_t seed) {
  const FieldSpec& f = L.field();
  const std::size_t n = L.dim();
  StemCenterReport r;
  r.center = center(L);

  Cover first = construct_cover(L);
  r.first = map_subspace(first.extension.projection, center(first.extension.total));

  const std::size_t width = 2 * n * n;
  std::vector<std::size_t> reversed(width);
  std::iota(reversed.rbegin(), reversed.rend(), std::size_t{0});
  CohomologySpace other = h2(L, 1, reversed);

  std::mt19937_64 rng(seed);
  auto small = [&]() { return Scalar::from_int(f, static_cast<long>(rng() % 5) - 2); };
  std::vector<CocyclePair> classes = other.reps();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    Vector v = classes[k].coordinates();
    for (std::size_t l = k + 1; l < classes.size(); ++l) {
      v = v + scale(other.reps()[l].coordinates(), small());
    }
    Matrix eps(f, n, 1);
    for (std::size_t i = 0; i < n; ++i) eps(i, 0) = small();
    v = v + coboundary_of(L, eps).coordinates();
    classes[k] = CocyclePair::from_coordinates(f, n, 1, v);
  }
  Cover second = construct_cover(L, classes);
  r.second = map_subspace(second.extension.projection, center(second.extension.total));
  r.distinct_extensions = !(first.extension.total == second.extension.total);
  r.unicentral = r.first == r.center;
  return r;
}

}  // namespace dias
