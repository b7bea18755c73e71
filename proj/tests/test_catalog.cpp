#include <gtest/gtest.h>

#include "dias/catalog.hpp"
#include "dias/errors.hpp"
#include "dias/extensions.hpp"
#include "generators.hpp"

using namespace dias;

namespace {
const FieldSpec Q = FieldSpec::rational();
}

TEST(Catalog, AbelianFamily) {
  EXPECT_EQ(abelian(0).dim(), 0U);
  DiasAlgebra a = abelian(1);
  EXPECT_TRUE(a.tensor(Product::left).is_zero() && a.tensor(Product::right).is_zero());
}

TEST(Catalog, ExampleCoverShape) {
  EXPECT_EQ(example3_cover(1).dim(), 3U);
  EXPECT_EQ(example3_cover(2).dim(), 10U);
  DiasAlgebra K = example3_cover(2);
  EXPECT_EQ(center(K).dim(), 8U);
  EXPECT_EQ(derived_subalgebra(K), center(K));
  EXPECT_EQ(K.label(3), "m1_2");
  EXPECT_EQ(K.multiply(Product::right, unit_vector(Q, 10, 1), unit_vector(Q, 10, 0)), unit_vector(Q, 10, 8));
  EXPECT_THROW(example3_cover(0), ShapeError);
}

TEST(Catalog, AssociativeAlgebras) {
  DiasAlgebra D = dual_numbers();
  EXPECT_TRUE(validate_axioms(D).ok());
  EXPECT_TRUE(derived_subalgebra(D).is_full());
  EXPECT_TRUE(center(diagonal_pair()).is_zero());
  DiasAlgebra s = strict_upper_2();
  EXPECT_EQ(s.dim(), 1U);
  EXPECT_TRUE(s.tensor(Product::left).is_zero());
  EXPECT_TRUE(validate_axioms(upper_triangular_2()).ok());
  EXPECT_TRUE(validate_axioms(truncated_poly_3()).ok());
  EXPECT_EQ(D.tensor(Product::left), D.tensor(Product::right));
}

TEST(Catalog, FromAssociativeRejectsNonAssociative) {
  // e0 e0 = e1, e1 e0 = e0: (e0 e0) e0 = e0 but e0 (e0 e0) = e0 e1 = 0
  StructureTensor t(Q, 2);
  t.set(0, 0, 1, Scalar::one(Q));
  t.set(1, 0, 0, Scalar::one(Q));
  EXPECT_THROW(from_associative(t), NotAssociative);
}

TEST(Catalog, TwoStepWithStandardPhiIsTheExampleCover) {
  const std::size_t n = 2, nn = 4;
  Matrix left(Q, nn, 2 * nn), right(Q, nn, 2 * nn);
  for (std::size_t r = 0; r < nn; ++r) {
    left(r, r) = Scalar::one(Q);
    right(r, nn + r) = Scalar::one(Q);
  }
  EXPECT_EQ(two_step(n, 2 * nn, left, right), example3_cover(2));
  EXPECT_THROW(two_step(3, 1, left, right), ShapeError);
}

TEST(Catalog, RandomTwoStepWithoutMIsAbelian) {
  EXPECT_EQ(random_two_step(3, 0, Q, 99), abelian(3));
}

TEST(Catalog, RandomTwoStepIsDeterministic) {
  EXPECT_EQ(random_two_step(3, 2, Q, 4), random_two_step(3, 2, Q, 4));
  EXPECT_FALSE(random_two_step(3, 2, Q, 4) == random_two_step(3, 2, Q, 5));
}

TEST(CatalogProperty, RandomTwoStepIsValidAndTwoStep) {
  for (const auto& f : gen::fields()) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const std::size_t n = seed % 5, m = (seed / 5) % 5;
      DiasAlgebra L = random_two_step(n, m, f, seed);
      ASSERT_TRUE(validate_axioms(L).ok()) << "seed " << seed << " over " << f.name();
      std::vector<Vector> block;
      for (std::size_t a = 0; a < m; ++a) block.push_back(unit_vector(f, n + m, n + a));
      Subspace M = Subspace::span(f, n + m, block);
      ASSERT_TRUE(subspace_contains(M, derived_subalgebra(L))) << "seed " << seed;
      ASSERT_TRUE(subspace_contains(center(L), M)) << "seed " << seed;
    }
  }
}

TEST(Corpus, ContentsAndKnownValues) {
  for (const auto& f : {Q, FieldSpec::prime(7)}) {
    auto entries = corpus(f);
    EXPECT_GE(entries.size(), 30U);
    std::size_t pairs = 0;
    for (const auto& e : entries) {
      EXPECT_TRUE(validate_axioms(e.algebra).ok()) << e.id;
      pairs += e.central_ideals.size();
      for (const auto& H : e.central_ideals) EXPECT_TRUE(is_central_ideal(e.algebra, H)) << e.id;
      if (e.known.derived_dim) EXPECT_EQ(derived_subalgebra(e.algebra).dim(), e.known.derived_dim->value) << e.id;
      if (e.known.center_dim) EXPECT_EQ(center(e.algebra).dim(), e.known.center_dim->value) << e.id;
      if (e.known.multiplier_dim && e.algebra.dim() <= 5) {
        EXPECT_EQ(multiplier(e.algebra).dim, e.known.multiplier_dim->value) << e.id;
      }
    }
    EXPECT_GE(pairs, 30U);
    for (const char* id : {"abelian_0", "abelian_5", "example3_cover_3", "dual_numbers", "truncated_poly_3",
                           "diagonal_pair", "upper_triangular_2", "two_step_20"}) {
      EXPECT_TRUE(find_entry(entries, id).has_value()) << id;
    }
    EXPECT_FALSE(find_entry(entries, "nope").has_value());
  }
}

TEST(Corpus, CentralIdealChoice) {
  auto ideals = central_ideals(example3_cover(1));
  ASSERT_EQ(ideals.size(), 3U);
  EXPECT_TRUE(ideals[0].is_zero());
  EXPECT_EQ(ideals[1].dim(), 2U);
  EXPECT_EQ(ideals[2].dim(), 1U);
  EXPECT_EQ(central_ideals(dual_numbers()).size(), 1U);
  // L' ∩ Z is used when proper: example3_cover_1 ⊕ abelian_1 has it equal to span{m, s}
  auto sum = central_ideals(direct_sum(example3_cover(1), abelian(1)));
  ASSERT_EQ(sum.size(), 3U);
  EXPECT_EQ(sum[2], derived_subalgebra(direct_sum(example3_cover(1), abelian(1))));
}
