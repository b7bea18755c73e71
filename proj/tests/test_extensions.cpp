#include <gtest/gtest.h>

#include "dias/catalog.hpp"
#include "dias/errors.hpp"
#include "dias/extensions.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace dias;

namespace {

const FieldSpec Q = FieldSpec::rational();

// The basis pair on the line: f⊣(x,x) = a0, f⊢(x,x) = a1.
CocyclePair line_pair() {
  CocyclePair c = CocyclePair::zero(Q, 1, 2);
  c.map(Product::left)(0, 0) = Scalar::one(Q);
  c.map(Product::right)(0, 1) = Scalar::one(Q);
  return c;
}

}  // namespace

TEST(Extension, LinePairRebuildsTheExampleCover) {
  ExtensionRecord e = extension_from_cocycle(abelian(1), line_pair());
  EXPECT_TRUE(validate_axioms(e.total).ok());
  EXPECT_TRUE(e.central && e.stem && e.cover);
  // E has basis (a0, a1, x); example3_cover(1) has (x, m, s).
  Matrix perm = Matrix::from_ints(Q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  EXPECT_TRUE(check_homomorphism(e.total, example3_cover(1), perm));
  EXPECT_TRUE(check_homomorphism(example3_cover(1), e.total, perm.transpose()));
}

TEST(Extension, RejectsNonCocycles) {
  CocyclePair bad = CocyclePair::zero(Q, 2, 1);
  bad.map(Product::left)(0, 0) = Scalar::one(Q);
  bad.map(Product::right)(0, 0) = Scalar::from_int(Q, 2);
  EXPECT_THROW(extension_from_cocycle(dual_numbers(), bad), NotACocycle);
  EXPECT_THROW(extension_from_cocycle(abelian(3), line_pair()), ShapeError);
}

TEST(Extension, RepsGiveValidAlgebrasAndRoundTrip) {
  for (const auto& f : gen::fields()) {
    for (const auto& entry : corpus(f)) {
      if (entry.algebra.dim() > 5) continue;
      CohomologySpace H = h2(entry.algebra, 1);
      for (const auto& rep : H.reps()) {
        ExtensionRecord e = extension_from_cocycle(entry.algebra, rep, H.dim());
        ASSERT_TRUE(validate_axioms(e.total).ok()) << entry.id;
        ASSERT_TRUE(e.central) << entry.id;
        ASSERT_EQ(extension_cocycle(e.total, e.kernel), rep) << entry.id;
      }
    }
  }
}

TEST(Extension, EquivalenceIsModuloCoboundaries) {
  DiasAlgebra L = random_two_step(2, 1, Q, 5);
  CohomologySpace H = h2(L, 1);
  ASSERT_GE(H.dim(), 2U);
  Matrix eps = Matrix::from_ints(Q, {{1}, {-2}, {3}});
  CocyclePair shifted = CocyclePair::from_coordinates(
      Q, 3, 1, H.reps()[0].coordinates() + coboundary_of(L, eps).coordinates());
  EXPECT_TRUE(extensions_equivalent(L, H.reps()[0], shifted));
  EXPECT_FALSE(extensions_equivalent(L, H.reps()[0], H.reps()[1]));
  EXPECT_EQ(class_coordinates(H, shifted), class_coordinates(H, H.reps()[0]));
}

TEST(Multiplier, KnownDimensions) {
  EXPECT_EQ(multiplier(abelian(0)).dim, 0U);
  EXPECT_EQ(multiplier(abelian(1)).dim, 2U);
  EXPECT_EQ(multiplier(abelian(2)).dim, 8U);
  EXPECT_EQ(multiplier(abelian(3)).dim, 18U);
  EXPECT_EQ(multiplier(dual_numbers()).dim, oracle::h2_dim(dual_numbers(), 1));
}

TEST(Cover, AbelianMeetsTheBound) {
  for (std::size_t n = 1; n <= 3; ++n) {
    Cover c = construct_cover(abelian(n));
    const DiasAlgebra& K = c.extension.total;
    EXPECT_EQ(K.dim(), n * (2 * n + 1));
    EXPECT_EQ(c.report.bound, K.dim());
    EXPECT_EQ(center(K), c.extension.kernel);
    EXPECT_EQ(derived_subalgebra(K), c.extension.kernel);
  }
}

TEST(Cover, ZeroAlgebra) {
  Cover c = construct_cover(abelian(0));
  EXPECT_EQ(c.extension.total.dim(), 0U);
  EXPECT_TRUE(c.report.ok());
}

TEST(Cover, TooFewClassesFailCertification) {
  CohomologySpace H = h2(abelian(1), 1);
  EXPECT_THROW(construct_cover(abelian(1), {H.reps()[0]}), CoverCertificationFailed);
}

TEST(Cover, DependentClassesFailCertification) {
  CohomologySpace H = h2(abelian(1), 1);
  EXPECT_THROW(construct_cover(abelian(1), {H.reps()[0], H.reps()[0]}), CoverCertificationFailed);
}

TEST(ZStar, AbelianAndUnicentral) {
  EXPECT_TRUE(z_star(abelian(2)).is_zero());
  EXPECT_FALSE(is_unicentral(abelian(1)));
  EXPECT_TRUE(is_unicentral(dual_numbers()));
  EXPECT_TRUE(is_unicentral(abelian(0)));
}

TEST(CentralCriteria, AbelianLineAllFalseAndZeroAllTrue) {
  auto r = theorem49_report(abelian(1), Subspace::full(Q, 1));
  EXPECT_FALSE(r.delta_zero || r.inf2_surjective || r.multiplier_identity || r.inside_z_star);
  EXPECT_TRUE(r.agree());
  auto z = theorem49_report(abelian(2), Subspace::zero(Q, 2));
  EXPECT_TRUE(z.delta_zero && z.inf2_surjective && z.multiplier_identity && z.inside_z_star);
  EXPECT_THROW(theorem49_report(dual_numbers(), Subspace::full(Q, 2)), NotCentralIdeal);
}

TEST(Stallings, AbelianFullIdeal) {
  auto r = verify_stallings(abelian(2), Subspace::full(Q, 2));
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.nodes[1].rank, 0U);        // head image {0} = Z ∩ L'
  EXPECT_EQ(r.nodes[2].kernel_dim, 0U);  // Z -> L/L' injective
}

TEST(StemCenter, AbelianPlaneBothZero) {
  auto r = stem_center_projection(abelian(2), 3);
  EXPECT_TRUE(r.first.is_zero());
  EXPECT_TRUE(r.second.is_zero());
  EXPECT_TRUE(r.distinct_extensions);
  EXPECT_TRUE(r.ok());
}

TEST(ExtensionsProperty, CorpusInvariants) {
  for (const auto& f : {Q, FieldSpec::prime(7)}) {
    for (const auto& e : corpus(f)) {
      if (e.algebra.dim() > 10) continue;
      const DiasAlgebra& L = e.algebra;
      const std::size_t n = L.dim();
      Cover c = construct_cover(L);
      const bool is_abelian = L.tensor(Product::left).is_zero() && L.tensor(Product::right).is_zero();
      EXPECT_LE(c.extension.total.dim(), n * (2 * n + 1)) << e.id;
      EXPECT_EQ(c.extension.total.dim() == n * (2 * n + 1), is_abelian) << e.id;
      Subspace zs = map_subspace(c.extension.projection, center(c.extension.total));
      EXPECT_TRUE(subspace_contains(center(L), zs)) << e.id;
      for (const auto& Z : e.central_ideals) {
        EXPECT_TRUE(theorem49_report(L, Z).agree()) << e.id;
        EXPECT_TRUE(verify_stallings(L, Z).exact()) << e.id;
      }
      EXPECT_TRUE(stem_center_projection(L).ok()) << e.id;
    }
  }
}

TEST(ExtensionsProperty, RandomCocycleRoundTrip) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    gen::Rng r(seed);
    const auto& f = r.field();
    DiasAlgebra L = gen::small_algebra(r, f);
    CohomologySpace H = h2(L, 1);
    // a random F²-valued cocycle: two random combinations of reps
    CocyclePair c = CocyclePair::zero(f, L.dim(), 2);
    for (std::size_t col = 0; col < 2; ++col) {
      Vector v = zero_vector(f, 2 * L.dim() * L.dim());
      for (const auto& rep : H.reps()) v = v + scale(rep.coordinates(), r.scalar(f));
      CocyclePair one = CocyclePair::from_coordinates(f, L.dim(), 1, v);
      for (Product p : kProducts)
        for (std::size_t row = 0; row < L.dim() * L.dim(); ++row) c.map(p)(row, col) = one.map(p)(row, 0);
    }
    ExtensionRecord e = extension_from_cocycle(L, c, H.dim());
    ASSERT_TRUE(validate_axioms(e.total).ok()) << "seed " << seed;
    ASSERT_EQ(extension_cocycle(e.total, e.kernel), c) << "seed " << seed;
  }
}
