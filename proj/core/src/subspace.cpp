#include "dias/subspace.hpp"

#include <algorithm>

#include "dias/errors.hpp"

namespace dias {

namespace {

void check_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw ShapeError(std::string(what) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                     " and " + std::to_string(b.ambient_dim()) + " differ");
  }
  if (!(a.field() == b.field())) throw FieldMismatch(std::string(what) + ": fields differ");
}

Echelon echelon_of(const Subspace& s) {
  Echelon e(s.field(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) e.insert(s.basis().row(i));
  return e;
}

Subspace permute(const Subspace& s, std::span<const std::size_t> order, bool inverse) {
  const std::size_t n = s.ambient_dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    Vector v = zero_vector(s.field(), n);
    for (std::size_t k = 0; k < n; ++k) {
      if (inverse) {
        v[order[k]] = s.basis()(i, k);
      } else {
        v[k] = s.basis()(i, order[k]);
      }
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(s.field(), n, gens);
}

}  // namespace

Subspace Subspace::zero(const FieldSpec& f, std::size_t n) {
  Subspace s;
  s.n_ = n;
  s.basis_ = Matrix(f, 0, n);
  return s;
}

Subspace Subspace::full(const FieldSpec& f, std::size_t n) {
  Subspace s;
  s.n_ = n;
  s.basis_ = Matrix::identity(f, n);
  for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const FieldSpec& f, std::size_t n, const std::vector<Vector>& gens) {
  Echelon e(f, n);
  for (const auto& g : gens) {
    if (g.size() != n) throw ShapeError("generator length differs from ambient dimension");
    e.insert(g);
  }
  Subspace s;
  s.n_ = n;
  s.basis_ = e.to_matrix();
  s.pivots_ = e.pivots();
  return s;
}

Subspace Subspace::from_matrix(const FieldSpec& f, std::size_t n, const Matrix& rows) {
  if (rows.cols() != n) throw ShapeError("generator matrix width differs from ambient dimension");
  if (!(rows.field() == f)) throw FieldMismatch("generator matrix over a different field");
  auto [reduced, pivots] = rref(rows);
  Subspace s;
  s.n_ = n;
  s.basis_ = std::move(reduced);
  s.pivots_ = std::move(pivots);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != n_) throw ShapeError("vector length differs from ambient dimension");
  Vector coords;
  coords.reserve(dim());
  for (auto p : pivots_) coords.push_back(v[p]);
  Vector rebuilt = combine(coords);
  for (std::size_t k = 0; k < n_; ++k) {
    if (!(rebuilt[k] == v[k])) return std::nullopt;
  }
  return coords;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

Vector Subspace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw ShapeError("coordinate count differs from dimension");
  Vector out = zero_vector(field(), n_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    for (std::size_t k = 0; k < n_; ++k) {
      if (!basis_(i, k).is_zero()) out[k] += coords[i] * basis_(i, k);
    }
  }
  return out;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "subspace_sum");
  Echelon e = echelon_of(a);
  for (std::size_t i = 0; i < b.dim(); ++i) e.insert(b.basis().row(i));
  return Subspace::from_matrix(a.field(), a.ambient_dim(), e.to_matrix());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "subspace_intersect");
  // Zassenhaus: rows (u | u) for u in a and (w | 0) for w in b; the echelon
  // rows whose left half vanishes carry a basis of a ∩ b on the right.
  const std::size_t n = a.ambient_dim();
  Echelon e(a.field(), 2 * n);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    SparseRow r;
    for (std::size_t k = 0; k < n; ++k) {
      if (!a.basis()(i, k).is_zero()) r.push_back({k, a.basis()(i, k)});
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!a.basis()(i, k).is_zero()) r.push_back({n + k, a.basis()(i, k)});
    }
    e.insert(std::move(r));
  }
  for (std::size_t i = 0; i < b.dim(); ++i) e.insert(to_sparse(b.basis().row(i)));
  Matrix m = e.to_matrix();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    if (!is_zero(row.subspan(0, n))) continue;
    auto right = row.subspan(n, n);
    gens.emplace_back(right.begin(), right.end());
  }
  return Subspace::span(a.field(), n, gens);
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  check_ambient(outer, inner, "subspace_contains");
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    if (!outer.contains(inner.basis().row(i))) return false;
  }
  return true;
}

Subspace complement(const Subspace& a, const Subspace& b) {
  check_ambient(a, b, "complement");
  if (!subspace_contains(b, a)) throw NotContained("complement: first subspace is not inside the second");
  Echelon reducer = echelon_of(a);
  Echelon out(a.field(), a.ambient_dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    out.insert(reducer.reduce(to_sparse(b.basis().row(i))));
  }
  return Subspace::from_matrix(a.field(), a.ambient_dim(), out.to_matrix());
}

Subspace complement(const Subspace& a, const Subspace& b,
                    std::span<const std::size_t> column_order) {
  check_ambient(a, b, "complement");
  const std::size_t n = a.ambient_dim();
  std::vector<std::size_t> check(column_order.begin(), column_order.end());
  std::sort(check.begin(), check.end());
  for (std::size_t k = 0; k < check.size(); ++k) {
    if (check.size() != n || check[k] != k) throw ShapeError("column order is not a permutation");
  }
  if (n == 0) return complement(a, b);
  Subspace c = complement(permute(a, column_order, false), permute(b, column_order, false));
  return permute(c, column_order, true);
}

}  // namespace dias
