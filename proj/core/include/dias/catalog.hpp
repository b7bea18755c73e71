#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dias/algebra.hpp"

namespace dias {

DiasAlgebra abelian(std::size_t n, const FieldSpec& f = FieldSpec::rational());

/// Basis x_1..x_n, m_ij, s_ij with x_i⊣x_j = m_ij, x_i⊢x_j = s_ij and every
/// other product zero. Requires n ≥ 1.
DiasAlgebra example3_cover(std::size_t n, const FieldSpec& f = FieldSpec::rational());

/// ⊣ = ⊢ = the given product. Throws NotAssociative.
DiasAlgebra from_associative(const StructureTensor& product, std::vector<std::string> labels = {});

/// F[t]/(t²), basis 1, t.
DiasAlgebra dual_numbers(const FieldSpec& f = FieldSpec::rational());
/// F[t]/(t³), basis 1, t, t².
DiasAlgebra truncated_poly_3(const FieldSpec& f = FieldSpec::rational());
/// F x F with componentwise product.
DiasAlgebra diagonal_pair(const FieldSpec& f = FieldSpec::rational());
/// Strictly upper-triangular 2x2 matrices: one basis vector, zero product.
DiasAlgebra strict_upper_2(const FieldSpec& f = FieldSpec::rational());
/// Upper-triangular 2x2 matrices, basis E11, E12, E22.
DiasAlgebra upper_triangular_2(const FieldSpec& f = FieldSpec::rational());

/// x⊣y = φ(y)x and x⊢y = φ(x)y with φ the first coordinate functional.
DiasAlgebra functional_dialgebra(std::size_t n, const FieldSpec& f = FieldSpec::rational());

/// V ⊕ M with dim V = n, dim M = m, V coordinates first. x_i * x_j = φ_p(i, j)
/// in M, where φ_p is an (n*n) x m matrix with row i*n + j; M annihilates
/// everything.
DiasAlgebra two_step(std::size_t n, std::size_t m, const Matrix& phi_left, const Matrix& phi_right);
/// two_step with φ drawn from a seeded mt19937_64: entries in [-2, 2] over Q,
/// uniform residues over GF(p).
DiasAlgebra random_two_step(std::size_t n, std::size_t m, const FieldSpec& f, std::uint64_t seed);

enum class Source { worked_example, hand_computed, construction };
const char* source_name(Source s);

struct KnownValue {
  std::size_t value = 0;
  Source source = Source::hand_computed;
};

struct KnownInvariants {
  std::optional<KnownValue> derived_dim;
  std::optional<KnownValue> center_dim;
  std::optional<KnownValue> multiplier_dim;
};

struct CatalogEntry {
  std::string id;
  DiasAlgebra algebra;
  KnownInvariants known;
  std::vector<Subspace> central_ideals;
};

/// {0}, Z(L) and, when dim Z(L) ≥ 2, one ideal strictly between them:
/// L' ∩ Z if that is proper and nonzero, otherwise the first basis line of Z.
std::vector<Subspace> central_ideals(const DiasAlgebra& L);

std::vector<CatalogEntry> corpus(const FieldSpec& f = FieldSpec::rational());
std::optional<CatalogEntry> find_entry(const std::vector<CatalogEntry>& entries, const std::string& id);

}  // namespace dias
