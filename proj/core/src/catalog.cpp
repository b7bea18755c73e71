#include "dias/catalog.hpp"

#include <random>
#include <tuple>

#include "dias/errors.hpp"

namespace dias {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

StructureTensor from_table(const FieldSpec& f, std::size_t n,
                           const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>& ones) {
  StructureTensor t(f, n);
  for (auto [i, j, k] : ones) t.set(i, j, k, Scalar::one(f));
  return t;
}

}  // namespace

DiasAlgebra abelian(std::size_t n, const FieldSpec& f) { return DiasAlgebra(f, n); }

DiasAlgebra example3_cover(std::size_t n, const FieldSpec& f) {
  if (n == 0) throw ShapeError("example3_cover: n must be at least 1");
  const std::size_t nn = n * n;
  Matrix left(f, nn, 2 * nn);
  Matrix right(f, nn, 2 * nn);
  for (std::size_t r = 0; r < nn; ++r) {
    left(r, r) = Scalar::one(f);
    right(r, nn + r) = Scalar::one(f);
  }
  DiasAlgebra L = two_step(n, 2 * nn, left, right);
  std::vector<std::string> labels = numbered("x", n);
  for (const char* prefix : {"m", "s"}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        labels.push_back(prefix + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
    }
  }
  L.set_labels(std::move(labels));
  return L;
}

DiasAlgebra from_associative(const StructureTensor& product, std::vector<std::string> labels) {
  DiasAlgebra L(product, product, std::move(labels));
  if (!validate_axioms(L, 1).ok()) throw NotAssociative("from_associative: product is not associative");
  return L;
}

DiasAlgebra dual_numbers(const FieldSpec& f) {
  return from_associative(from_table(f, 2, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}), {"1", "t"});
}

DiasAlgebra truncated_poly_3(const FieldSpec& f) {
  return from_associative(
      from_table(f, 3, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2}, {1, 1, 2}}),
      {"1", "t", "t2"});
}

DiasAlgebra diagonal_pair(const FieldSpec& f) {
  return from_associative(from_table(f, 2, {{0, 0, 0}, {1, 1, 1}}), {"u", "v"});
}

DiasAlgebra strict_upper_2(const FieldSpec& f) {
  return from_associative(StructureTensor(f, 1), {"E12"});
}

DiasAlgebra upper_triangular_2(const FieldSpec& f) {
  // E11 E11 = E11, E11 E12 = E12, E12 E22 = E12, E22 E22 = E22
  return from_associative(from_table(f, 3, {{0, 0, 0}, {0, 1, 1}, {1, 2, 1}, {2, 2, 2}}),
                          {"E11", "E12", "E22"});
}

DiasAlgebra functional_dialgebra(std::size_t n, const FieldSpec& f) {
  if (n == 0) throw ShapeError("functional_dialgebra: n must be at least 1");
  StructureTensor left(f, n);
  StructureTensor right(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    left.set(i, 0, i, Scalar::one(f));
    right.set(0, i, i, Scalar::one(f));
  }
  return DiasAlgebra(std::move(left), std::move(right), numbered("e", n));
}

DiasAlgebra two_step(std::size_t n, std::size_t m, const Matrix& phi_left, const Matrix& phi_right) {
  const FieldSpec& f = phi_left.field();
  for (const Matrix* phi : {&phi_left, &phi_right}) {
    if (phi->rows() != n * n || phi->cols() != m) throw ShapeError("two_step: φ must be (n*n) x m");
  }
  if (!(phi_right.field() == f)) throw FieldMismatch("two_step: φ matrices over different fields");
  StructureTensor left(f, n + m);
  StructureTensor right(f, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < m; ++a) {
        if (!phi_left(i * n + j, a).is_zero()) left.set(i, j, n + a, phi_left(i * n + j, a));
        if (!phi_right(i * n + j, a).is_zero()) right.set(i, j, n + a, phi_right(i * n + j, a));
      }
    }
  }
  std::vector<std::string> labels = numbered("v", n);
  for (auto& s : numbered("m", m)) labels.push_back(s);
  return DiasAlgebra(std::move(left), std::move(right), std::move(labels));
}

DiasAlgebra random_two_step(std::size_t n, std::size_t m, const FieldSpec& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    if (f.is_rational()) return Scalar::from_int(f, static_cast<long>(rng() % 5) - 2);
    return Scalar::from_int(f, static_cast<long>(rng() % f.modulus()));
  };
  Matrix left(f, n * n, m);
  Matrix right(f, n * n, m);
  for (Matrix* phi : {&left, &right}) {
    for (std::size_t r = 0; r < n * n; ++r) {
      for (std::size_t a = 0; a < m; ++a) (*phi)(r, a) = draw();
    }
  }
  return two_step(n, m, left, right);
}

const char* source_name(Source s) {
  switch (s) {
    case Source::worked_example: return "worked-example";
    case Source::hand_computed: return "hand-computed";
    case Source::construction: return "construction";
  }
  return "?";
}

std::vector<Subspace> central_ideals(const DiasAlgebra& L) {
  const FieldSpec& f = L.field();
  const Subspace z = center(L);
  std::vector<Subspace> out{Subspace::zero(f, L.dim())};
  if (z.is_zero()) return out;
  out.push_back(z);
  if (z.dim() >= 2) {
    Subspace meet = subspace_intersect(derived_subalgebra(L), z);
    if (meet.is_zero() || meet == z) meet = Subspace::span(f, L.dim(), {z.basis_vector(0)});
    out.push_back(meet);
  }
  return out;
}

std::vector<CatalogEntry> corpus(const FieldSpec& f) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string id, DiasAlgebra L, KnownInvariants known = {}) {
    std::vector<Subspace> ideals = central_ideals(L);
    out.push_back({std::move(id), std::move(L), known, std::move(ideals)});
  };
  auto v = [](std::size_t value, Source s) { return std::optional<KnownValue>(KnownValue{value, s}); };

  for (std::size_t n = 0; n <= 5; ++n) {
    add("abelian_" + std::to_string(n), abelian(n, f),
        {v(0, Source::hand_computed), v(n, Source::hand_computed),
         v(2 * n * n, Source::worked_example)});
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    add("example3_cover_" + std::to_string(n), example3_cover(n, f),
        {v(2 * n * n, Source::worked_example), v(2 * n * n, Source::worked_example), std::nullopt});
  }
  add("dual_numbers", dual_numbers(f), {v(2, Source::hand_computed), v(0, Source::hand_computed), {}});
  add("truncated_poly_3", truncated_poly_3(f),
      {v(3, Source::hand_computed), v(0, Source::hand_computed), {}});
  add("diagonal_pair", diagonal_pair(f), {v(2, Source::hand_computed), v(0, Source::hand_computed), {}});
  add("strict_upper_2", strict_upper_2(f),
      {v(0, Source::hand_computed), v(1, Source::hand_computed), v(2, Source::worked_example)});
  add("upper_triangular_2", upper_triangular_2(f),
      {v(3, Source::hand_computed), v(0, Source::hand_computed), {}});
  add("functional_2", functional_dialgebra(2, f), {v(2, Source::hand_computed), v(0, Source::hand_computed), {}});
  add("functional_3", functional_dialgebra(3, f), {v(3, Source::hand_computed), v(0, Source::hand_computed), {}});

  add("dual_numbers+abelian_1", direct_sum(dual_numbers(f), abelian(1, f)));
  add("dual_numbers+dual_numbers", direct_sum(dual_numbers(f), dual_numbers(f)));
  add("diagonal_pair+strict_upper_2", direct_sum(diagonal_pair(f), strict_upper_2(f)));
  add("upper_triangular_2+abelian_1", direct_sum(upper_triangular_2(f), abelian(1, f)));
  add("example3_cover_1+abelian_1", direct_sum(example3_cover(1, f), abelian(1, f)));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const std::size_t n = 1 + seed % 3;
    const std::size_t m = seed % 4;
    add("two_step_" + std::to_string(seed), random_two_step(n, m, f, seed),
        {std::nullopt, std::nullopt, std::nullopt});
  }
  return out;
}

std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& entries, const std::string& id) {
  for (const auto& e : entries) {
    if (e.id == id) return e;
  }
  return std::nullopt;
}

}  // namespace dias
