#include "dias/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "dias/errors.hpp"

namespace dias {

namespace {

// Sort by column, merge duplicates, drop zeros.
SparseRow normalize(SparseRow r) {
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  SparseRow out;
  for (auto& e : r) {
    if (!out.empty() && out.back().col == e.col) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::erase_if(out, [](const SparseEntry& e) { return e.value.is_zero(); });
  return out;
}

// Emits every row of the C1-C5 system. Each row is a linear functional on
// the flat cochain coordinates.
void for_each_constraint(const DiasAlgebra& B, std::size_t m,
                         const std::function<void(SparseRow)>& emit) {
  const std::size_t n = B.dim();
  const auto& lt = B.tensor(Product::left);
  const auto& rt = B.tensor(Product::right);
  const Scalar one = Scalar::one(B.field());
  const Scalar minus_one = -one;

  // Appends sign * f_p(x_i, w)_a (w given sparse) or sign * f_p(w, x_k)_a.
  auto basis_first = [&](SparseRow& row, Product p, std::size_t i, const SparseRow& w,
                         std::size_t a, const Scalar& sign) {
    for (const auto& e : w) row.push_back({cochain_index(p, n, m, i, e.col, a), sign * e.value});
  };
  auto basis_second = [&](SparseRow& row, Product p, const SparseRow& w, std::size_t k,
                          std::size_t a, const Scalar& sign) {
    for (const auto& e : w) row.push_back({cochain_index(p, n, m, e.col, k, a), sign * e.value});
  };

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SparseRow& ij_l = lt.sparse_product(i, j);
      const SparseRow& ij_r = rt.sparse_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const SparseRow& jk_l = lt.sparse_product(j, k);
        const SparseRow& jk_r = rt.sparse_product(j, k);
        if (ij_l.empty() && ij_r.empty() && jk_l.empty() && jk_r.empty()) continue;
        for (std::size_t a = 0; a < m; ++a) {
          SparseRow c1;
          basis_first(c1, Product::left, i, jk_l, a, one);
          basis_first(c1, Product::left, i, jk_r, a, minus_one);
          SparseRow c2;
          basis_second(c2, Product::left, ij_r, k, a, one);
          basis_first(c2, Product::right, i, jk_l, a, minus_one);
          SparseRow c3;
          basis_second(c3, Product::right, ij_l, k, a, one);
          basis_second(c3, Product::right, ij_r, k, a, minus_one);
          SparseRow c4;
          basis_first(c4, Product::left, i, jk_l, a, one);
          basis_second(c4, Product::left, ij_l, k, a, minus_one);
          SparseRow c5;
          basis_first(c5, Product::right, i, jk_r, a, one);
          basis_second(c5, Product::right, ij_r, k, a, minus_one);
          for (SparseRow* r : {&c1, &c2, &c3, &c4, &c5}) {
            SparseRow clean = normalize(std::move(*r));
            if (!clean.empty()) emit(std::move(clean));
          }
        }
      }
    }
  }
}

void check_cochain(const CocyclePair& c, const DiasAlgebra& B) {
  if (c.base_dim != B.dim()) throw ShapeError("cochain base dimension differs from the algebra");
  if (B.dim() > 0 && !(c.field == B.field())) throw FieldMismatch("cochain over a different field");
}

}  // namespace

std::size_t cochain_index(Product p, std::size_t n, std::size_t m, std::size_t i, std::size_t j,
                          std::size_t a) {
  const std::size_t base = p == Product::left ? 0 : n * n * m;
  return base + (i * n + j) * m + a;
}

CocyclePair CocyclePair::zero(const FieldSpec& f, std::size_t n, std::size_t m) {
  return {f, n, m, Matrix(f, n * n, m), Matrix(f, n * n, m)};
}

CocyclePair CocyclePair::from_coordinates(const FieldSpec& f, std::size_t n, std::size_t m,
                                          std::span<const Scalar> flat) {
  if (flat.size() != 2 * n * n * m) throw ShapeError("cochain coordinate vector has wrong length");
  CocyclePair c = zero(f, n, m);
  for (Product p : kProducts) {
    for (std::size_t r = 0; r < n * n; ++r) {
      for (std::size_t a = 0; a < m; ++a) c.map(p).set(r, a, flat[cochain_index(p, n, m, r / n, r % n, a)]);
    }
  }
  return c;
}

Vector CocyclePair::coordinates() const {
  const std::size_t n = base_dim;
  const std::size_t m = coeff_dim;
  Vector flat = zero_vector(field, 2 * n * n * m);
  for (Product p : kProducts) {
    for (std::size_t r = 0; r < n * n; ++r) {
      for (std::size_t a = 0; a < m; ++a) flat[cochain_index(p, n, m, r / n, r % n, a)] = map(p)(r, a);
    }
  }
  return flat;
}

Vector CocyclePair::value(Product p, std::size_t i, std::size_t j) const {
  return map(p).row_vector(i * base_dim + j);
}

Vector CocyclePair::evaluate(Product p, std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != base_dim || y.size() != base_dim) throw ShapeError("cochain argument length");
  Vector out = zero_vector(field, coeff_dim);
  for (std::size_t i = 0; i < base_dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < base_dim; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t a = 0; a < coeff_dim; ++a) {
        const Scalar& v = map(p)(i * base_dim + j, a);
        if (!v.is_zero()) out[a] += w * v;
      }
    }
  }
  return out;
}

bool satisfies_cocycle_axioms(const DiasAlgebra& B, const CocyclePair& c) {
  check_cochain(c, B);
  const Vector flat = c.coordinates();
  bool ok = true;
  for_each_constraint(B, c.coeff_dim, [&](SparseRow row) {
    if (!ok) return;
    Scalar acc = Scalar::zero(B.field());
    for (const auto& e : row) acc += e.value * flat[e.col];
    if (!acc.is_zero()) ok = false;
  });
  return ok;
}

std::size_t cocycle_constraint_rank(const DiasAlgebra& B, std::size_t m) {
  Echelon e(B.field(), 2 * B.dim() * B.dim() * m);
  for_each_constraint(B, m, [&](SparseRow row) { e.insert(std::move(row)); });
  return e.rank();
}

Subspace cocycle_space(const DiasAlgebra& B, std::size_t m) {
  Echelon e(B.field(), 2 * B.dim() * B.dim() * m);
  for_each_constraint(B, m, [&](SparseRow row) { e.insert(std::move(row)); });
  return kernel(e);
}

Subspace coboundary_space(const DiasAlgebra& B, std::size_t m) {
  const std::size_t n = B.dim();
  const std::size_t width = 2 * n * n * m;
  Echelon e(B.field(), width);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t a = 0; a < m; ++a) {
      SparseRow r;
      for (Product p : kProducts) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            const Scalar& c = B.tensor(p)(i, j, l);
            if (!c.is_zero()) r.push_back({cochain_index(p, n, m, i, j, a), -c});
          }
        }
      }
      e.insert(std::move(r));
    }
  }
  return Subspace::from_matrix(B.field(), width, e.to_matrix());
}

CocyclePair coboundary_of(const DiasAlgebra& B, const Matrix& epsilon) {
  const std::size_t n = B.dim();
  if (epsilon.rows() != n) throw ShapeError("coboundary_of: ε must have one row per basis vector");
  const std::size_t m = epsilon.cols();
  CocyclePair c = CocyclePair::zero(B.field(), n, m);
  for (Product p : kProducts) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const auto& e : B.tensor(p).sparse_product(i, j)) {
          for (std::size_t a = 0; a < m; ++a) c.map(p)(i * n + j, a).sub_mul(e.value, epsilon(e.col, a));
        }
      }
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

CohomologySpace::CohomologySpace(const FieldSpec& f, std::size_t base_dim, std::size_t coeff_dim,
                                 Subspace cocycles, Subspace coboundaries,
                                 Subspace representatives)
    : field_(f),
      base_dim_(base_dim),
      coeff_dim_(coeff_dim),
      cocycles_(std::move(cocycles)),
      coboundaries_(std::move(coboundaries)),
      reps_space_(std::move(representatives)) {
  for (std::size_t k = 0; k < reps_space_.dim(); ++k) {
    reps_.push_back(
        CocyclePair::from_coordinates(f, base_dim, coeff_dim, reps_space_.basis().row(k)));
  }
}

namespace {

CohomologySpace build_h2(const DiasAlgebra& B, std::size_t m,
                         std::optional<std::span<const std::size_t>> order) {
  Subspace z = cocycle_space(B, m);
  Subspace b = coboundary_space(B, m);
  if (!subspace_contains(z, b)) {
    throw std::logic_error("coboundaries are not cocycles; the algebra is not diassociative");
  }
  Subspace reps = order ? complement(b, z, *order) : complement(b, z);
  return CohomologySpace(B.field(), B.dim(), m, std::move(z), std::move(b), std::move(reps));
}

}  // namespace

CohomologySpace h2(const DiasAlgebra& B, std::size_t m) { return build_h2(B, m, std::nullopt); }

CohomologySpace h2(const DiasAlgebra& B, std::size_t m, std::span<const std::size_t> column_order) {
  return build_h2(B, m, column_order);
}

Vector class_coordinates(const CohomologySpace& H, const CocyclePair& c) {
  if (c.base_dim != H.base_dim() || c.coeff_dim != H.coeff_dim()) {
    throw ShapeError("class_coordinates: cochain shape differs from the cohomology space");
  }
  const Vector flat = c.coordinates();
  if (!H.cocycles().contains(flat)) throw NotACocycle("class_coordinates: not a 2-cocycle");
  // Strip the coboundary part: what remains has zeros on B²'s pivot columns
  // and lies in the span of the representatives.
  Vector rest = flat;
  const auto& bd = H.coboundaries();
  for (std::size_t r = 0; r < bd.dim(); ++r) {
    Scalar a = rest[bd.pivots()[r]];
    if (a.is_zero()) continue;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      if (!bd.basis()(r, k).is_zero()) rest[k].sub_mul(a, bd.basis()(r, k));
    }
  }
  auto coords = H.representative_span().coordinates(rest);
  if (!coords) throw std::logic_error("class_coordinates: representatives do not span Z²/B²");
  return *coords;
}

Subspace hom_space(const DiasAlgebra& L, std::size_t m) {
  const std::size_t n = L.dim();
  Subspace derived = derived_subalgebra(L);
  Echelon e(L.field(), n * m);
  for (std::size_t r = 0; r < derived.dim(); ++r) {
    for (std::size_t a = 0; a < m; ++a) {
      SparseRow row;
      for (std::size_t i = 0; i < n; ++i) {
        if (!derived.basis()(r, i).is_zero()) row.push_back({i * m + a, derived.basis()(r, i)});
      }
      e.insert(std::move(row));
    }
  }
  return kernel(e);
}

CocyclePair compose(const Matrix& chi, const CocyclePair& c) {
  if (chi.cols() != c.coeff_dim) throw ShapeError("compose: χ has the wrong number of columns");
  Matrix t = chi.transpose();
  return {c.field, c.base_dim, chi.rows(), c.left * t, c.right * t};
}

CocyclePair pullback(const CocyclePair& c, const Matrix& phi) {
  if (phi.rows() != c.base_dim) throw ShapeError("pullback: φ must land in the cochain's base");
  const std::size_t n = phi.cols();
  CocyclePair out = CocyclePair::zero(c.field, n, c.coeff_dim);
  for (std::size_t i = 0; i < n; ++i) {
    Vector x = phi.column(i);
    for (std::size_t j = 0; j < n; ++j) {
      Vector y = phi.column(j);
      for (Product p : kProducts) {
        Vector v = c.evaluate(p, x, y);
        for (std::size_t a = 0; a < c.coeff_dim; ++a) out.map(p)(i * n + j, a) = v[a];
      }
    }
  }
  return out;
}

ExtensionCocycle extension_cocycle_data(const DiasAlgebra& L, const Subspace& H) {
  if (!is_central_ideal(L, H)) throw NotCentralIdeal("extension_cocycle: not a central ideal");
  Quotient q = quotient_algebra(L, H);
  const std::size_t qd = q.algebra.dim();
  CocyclePair f = CocyclePair::zero(L.field(), qd, H.dim());
  for (Product p : kProducts) {
    for (std::size_t a = 0; a < qd; ++a) {
      Vector mu_a = q.section.column(a);
      for (std::size_t b = 0; b < qd; ++b) {
        Vector mu_b = q.section.column(b);
        Vector v = L.multiply(p, mu_a, mu_b) - q.section * q.algebra.tensor(p).basis_product(a, b);
        auto coords = H.coordinates(v);
        if (!coords) throw std::logic_error("extension_cocycle: value escaped the ideal");
        for (std::size_t r = 0; r < H.dim(); ++r) f.map(p)(a * qd + b, r) = (*coords)[r];
      }
    }
  }
  return {std::move(q), std::move(f)};
}

CocyclePair extension_cocycle(const DiasAlgebra& L, const Subspace& H) {
  return extension_cocycle_data(L, H).cocycle;
}

}  // namespace dias
