#include "dias/algebra.hpp"

#include <algorithm>

#include "dias/errors.hpp"

namespace dias {

namespace {

// acc += coeff * row, both sorted.
void add_scaled(SparseRow& acc, const Scalar& coeff, const SparseRow& row) {
  if (row.empty() || coeff.is_zero()) return;
  SparseRow out;
  out.reserve(acc.size() + row.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < acc.size() || j < row.size()) {
    if (j == row.size() || (i < acc.size() && acc[i].col < row[j].col)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || row[j].col < acc[i].col) {
      out.push_back({row[j].col, coeff * row[j].value});
      ++j;
    } else {
      Scalar v = std::move(acc[i].value);
      v += coeff * row[j].value;
      if (!v.is_zero()) out.push_back({row[j].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

// (Σ v_l x_l) * x_k
SparseRow times_basis(const StructureTensor& t, const SparseRow& v, std::size_t k) {
  SparseRow acc;
  for (const auto& e : v) add_scaled(acc, e.value, t.sparse_product(e.col, k));
  return acc;
}

// x_i * (Σ v_l x_l)
SparseRow basis_times(const StructureTensor& t, std::size_t i, const SparseRow& v) {
  SparseRow acc;
  for (const auto& e : v) add_scaled(acc, e.value, t.sparse_product(i, e.col));
  return acc;
}

SparseRow difference(SparseRow a, const SparseRow& b) {
  if (b.empty()) return a;
  add_scaled(a, -Scalar::one(b.front().value.field()), b);
  return a;
}

SparseRow sparse_residual(const DiasAlgebra& L, Axiom a, std::size_t i, std::size_t j,
                          std::size_t k) {
  const auto& lt = L.tensor(Product::left);
  const auto& rt = L.tensor(Product::right);
  switch (a) {
    case Axiom::left_associative:
      return difference(times_basis(lt, lt.sparse_product(i, j), k),
                        basis_times(lt, i, lt.sparse_product(j, k)));
    case Axiom::right_associative:
      return difference(times_basis(rt, rt.sparse_product(i, j), k),
                        basis_times(rt, i, rt.sparse_product(j, k)));
    case Axiom::left_absorbs:
      return difference(basis_times(lt, i, lt.sparse_product(j, k)),
                        basis_times(lt, i, rt.sparse_product(j, k)));
    case Axiom::middle:
      return difference(times_basis(lt, rt.sparse_product(i, j), k),
                        basis_times(rt, i, lt.sparse_product(j, k)));
    case Axiom::right_absorbs:
      return difference(times_basis(rt, lt.sparse_product(i, j), k),
                        times_basis(rt, rt.sparse_product(i, j), k));
  }
  return {};
}

Vector densify(const FieldSpec& f, std::size_t n, const SparseRow& r) {
  Vector v = zero_vector(f, n);
  for (const auto& e : r) v[e.col] = e.value;
  return v;
}

void check_same_field(const DiasAlgebra& L, const Subspace& s, const char* what) {
  if (s.ambient_dim() != L.dim()) {
    throw ShapeError(std::string(what) + ": subspace ambient dimension " +
                     std::to_string(s.ambient_dim()) + " differs from algebra dimension " +
                     std::to_string(L.dim()));
  }
  if (L.dim() > 0 && !(s.field() == L.field())) {
    throw FieldMismatch(std::string(what) + ": subspace and algebra fields differ");
  }
}

}  // namespace

const char* product_symbol(Product p) { return p == Product::left ? "⊣" : "⊢"; }

// ---------------------------------------------------------------------------

StructureTensor::StructureTensor(const FieldSpec& f, std::size_t n)
    : field_(f), n_(n), c_(n * n * n, Scalar::zero(f)), sparse_(n * n) {}

void StructureTensor::set(std::size_t i, std::size_t j, std::size_t k, Scalar v) {
  if (i >= n_ || j >= n_ || k >= n_) throw ShapeError("structure constant index out of range");
  if (!(v.field() == field_)) throw FieldMismatch("structure constant over a different field");
  c_[(i * n_ + j) * n_ + k] = std::move(v);
  auto& row = sparse_[i * n_ + j];
  auto it = std::lower_bound(row.begin(), row.end(), k,
                             [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  const Scalar& stored = c_[(i * n_ + j) * n_ + k];
  if (it != row.end() && it->col == k) {
    if (stored.is_zero()) {
      row.erase(it);
    } else {
      it->value = stored;
    }
  } else if (!stored.is_zero()) {
    row.insert(it, {k, stored});
  }
}

Vector StructureTensor::basis_product(std::size_t i, std::size_t j) const {
  return densify(field_, n_, sparse_product(i, j));
}

bool StructureTensor::is_zero() const {
  return std::all_of(sparse_.begin(), sparse_.end(), [](const SparseRow& r) { return r.empty(); });
}

// ---------------------------------------------------------------------------

DiasAlgebra::DiasAlgebra(const FieldSpec& f, std::size_t n) : left_(f, n), right_(f, n) {}

DiasAlgebra::DiasAlgebra(StructureTensor left, StructureTensor right,
                         std::vector<std::string> labels)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.dim() != right_.dim()) throw ShapeError("the two structure tensors differ in size");
  if (!(left_.field() == right_.field())) throw FieldMismatch("the two structure tensors differ in field");
  set_labels(std::move(labels));
}

void DiasAlgebra::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != dim()) {
    throw ShapeError("label count differs from dimension");
  }
  labels_ = std::move(labels);
}

std::string DiasAlgebra::label(std::size_t i) const {
  return labels_.empty() ? "e" + std::to_string(i) : labels_.at(i);
}

Vector DiasAlgebra::multiply(Product p, std::span<const Scalar> x,
                             std::span<const Scalar> y) const {
  if (x.size() != dim() || y.size() != dim()) throw ShapeError("multiply: vector length");
  const auto& t = tensor(p);
  SparseRow acc;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero()) continue;
      add_scaled(acc, x[i] * y[j], t.sparse_product(i, j));
    }
  }
  return densify(field(), dim(), acc);
}

Vector DiasAlgebra::multiply_basis_left(Product p, std::size_t i, std::span<const Scalar> v) const {
  return densify(field(), dim(), basis_times(tensor(p), i, to_sparse(v)));
}

Vector DiasAlgebra::multiply_basis_right(Product p, std::span<const Scalar> v,
                                         std::size_t j) const {
  return densify(field(), dim(), times_basis(tensor(p), to_sparse(v), j));
}

// ---------------------------------------------------------------------------

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::left_associative: return "left_associative";
    case Axiom::right_associative: return "right_associative";
    case Axiom::left_absorbs: return "left_absorbs";
    case Axiom::middle: return "middle";
    case Axiom::right_absorbs: return "right_absorbs";
  }
  return "?";
}

const char* axiom_identity(Axiom a) {
  switch (a) {
    case Axiom::left_associative: return "(x⊣y)⊣z = x⊣(y⊣z)";
    case Axiom::right_associative: return "(x⊢y)⊢z = x⊢(y⊢z)";
    case Axiom::left_absorbs: return "x⊣(y⊣z) = x⊣(y⊢z)";
    case Axiom::middle: return "(x⊢y)⊣z = x⊢(y⊣z)";
    case Axiom::right_absorbs: return "(x⊣y)⊢z = (x⊢y)⊢z";
  }
  return "?";
}

std::size_t ValidationReport::count(Axiom a) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [a](const auto& v) { return v.axiom == a; }));
}

Vector axiom_residual(const DiasAlgebra& L, Axiom a, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = L.dim();
  if (i >= n || j >= n || k >= n) throw ShapeError("axiom_residual: index out of range");
  return densify(L.field(), n, sparse_residual(L, a, i, j, k));
}

ValidationReport validate_axioms(const DiasAlgebra& L, std::size_t max_violations) {
  ValidationReport report;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (Axiom a : kAxioms) {
          SparseRow r = sparse_residual(L, a, i, j, k);
          if (r.empty()) continue;
          report.violations.push_back({a, i, j, k, densify(L.field(), n, r)});
          if (max_violations != 0 && report.violations.size() >= max_violations) return report;
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

Subspace box_product(const DiasAlgebra& L, const Subspace& a, const Subspace& b) {
  check_same_field(L, a, "box_product");
  check_same_field(L, b, "box_product");
  Echelon e(L.field(), L.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      for (Product p : kProducts) e.insert(L.multiply(p, a.basis().row(i), b.basis().row(j)));
    }
  }
  return Subspace::from_matrix(L.field(), L.dim(), e.to_matrix());
}

Subspace derived_subalgebra(const DiasAlgebra& L) {
  Echelon e(L.field(), L.dim());
  for (Product p : kProducts) {
    for (std::size_t i = 0; i < L.dim(); ++i) {
      for (std::size_t j = 0; j < L.dim(); ++j) e.insert(L.tensor(p).sparse_product(i, j));
    }
  }
  return Subspace::from_matrix(L.field(), L.dim(), e.to_matrix());
}

Subspace center(const DiasAlgebra& L) {
  const std::size_t n = L.dim();
  // Unknown z = Σ z_i x_i. Constraints: z * x_j = 0 and x_j * z = 0.
  Echelon constraints(L.field(), n);
  for (Product p : kProducts) {
    const auto& t = L.tensor(p);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<SparseRow> as_left(n);
      std::vector<SparseRow> as_right(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& e : t.sparse_product(i, j)) as_left[e.col].push_back({i, e.value});
        for (const auto& e : t.sparse_product(j, i)) as_right[e.col].push_back({i, e.value});
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!as_left[k].empty()) constraints.insert(std::move(as_left[k]));
        if (!as_right[k].empty()) constraints.insert(std::move(as_right[k]));
      }
    }
  }
  return kernel(constraints);
}

bool is_ideal(const DiasAlgebra& L, const Subspace& I) {
  check_same_field(L, I, "is_ideal");
  for (std::size_t r = 0; r < I.dim(); ++r) {
    SparseRow v = to_sparse(I.basis().row(r));
    for (Product p : kProducts) {
      const auto& t = L.tensor(p);
      for (std::size_t j = 0; j < L.dim(); ++j) {
        if (!I.contains(densify(L.field(), L.dim(), times_basis(t, v, j)))) return false;
        if (!I.contains(densify(L.field(), L.dim(), basis_times(t, j, v)))) return false;
      }
    }
  }
  return true;
}

bool is_central_ideal(const DiasAlgebra& L, const Subspace& I) {
  return is_ideal(L, I) && subspace_contains(center(L), I);
}

Quotient quotient_algebra(const DiasAlgebra& L, const Subspace& I) {
  if (!is_ideal(L, I)) throw NotIdeal("quotient_algebra: subspace is not an ideal");
  const std::size_t n = L.dim();
  const FieldSpec& f = L.field();
  std::vector<char> is_pivot(n, 0);
  for (auto p : I.pivots()) is_pivot[p] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  const std::size_t q = free_cols.size();

  Matrix section(f, n, q);
  for (std::size_t a = 0; a < q; ++a) section(free_cols[a], a) = Scalar::one(f);

  Matrix projection(f, q, n);
  for (std::size_t a = 0; a < q; ++a) projection(a, free_cols[a]) = Scalar::one(f);
  for (std::size_t r = 0; r < I.dim(); ++r) {
    const std::size_t pc = I.pivots()[r];
    for (std::size_t a = 0; a < q; ++a) projection(a, pc) = -I.basis()(r, free_cols[a]);
  }

  StructureTensor left(f, q);
  StructureTensor right(f, q);
  for (Product p : kProducts) {
    auto& t = p == Product::left ? left : right;
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        Vector image = projection * L.tensor(p).basis_product(free_cols[a], free_cols[b]);
        for (std::size_t c = 0; c < q; ++c) {
          if (!image[c].is_zero()) t.set(a, b, c, image[c]);
        }
      }
    }
  }
  std::vector<std::string> labels;
  if (!L.labels().empty()) {
    for (auto c : free_cols) labels.push_back(L.labels()[c]);
  }
  return {DiasAlgebra(std::move(left), std::move(right), std::move(labels)), std::move(projection),
          std::move(section), I};
}

DiasAlgebra direct_sum(const DiasAlgebra& a, const DiasAlgebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("direct_sum: fields differ");
  const std::size_t n = a.dim() + b.dim();
  const std::size_t off = a.dim();
  StructureTensor left(a.field(), n);
  StructureTensor right(a.field(), n);
  for (Product p : kProducts) {
    auto& t = p == Product::left ? left : right;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        for (const auto& e : a.tensor(p).sparse_product(i, j)) t.set(i, j, e.col, e.value);
      }
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t j = 0; j < b.dim(); ++j) {
        for (const auto& e : b.tensor(p).sparse_product(i, j)) {
          t.set(off + i, off + j, off + e.col, e.value);
        }
      }
    }
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
    for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back(b.label(i) + "'");
  }
  return DiasAlgebra(std::move(left), std::move(right), std::move(labels));
}

bool check_homomorphism(const DiasAlgebra& source, const DiasAlgebra& target, const Matrix& phi) {
  if (phi.rows() != target.dim() || phi.cols() != source.dim()) {
    throw ShapeError("check_homomorphism: matrix shape does not match the algebras");
  }
  if (source.dim() > 0 && target.dim() > 0 && !(source.field() == target.field())) {
    throw FieldMismatch("check_homomorphism: fields differ");
  }
  std::vector<Vector> images;
  for (std::size_t i = 0; i < source.dim(); ++i) images.push_back(phi.column(i));
  for (Product p : kProducts) {
    for (std::size_t i = 0; i < source.dim(); ++i) {
      for (std::size_t j = 0; j < source.dim(); ++j) {
        Vector lhs = phi * source.tensor(p).basis_product(i, j);
        Vector rhs = target.multiply(p, images[i], images[j]);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool check_homomorphism(const AlgebraMorphismCheck& m) {
  return check_homomorphism(m.source, m.target, m.matrix);
}

Subspace map_subspace(const Matrix& phi, const Subspace& s) {
  if (phi.cols() != s.ambient_dim()) throw ShapeError("map_subspace: shape mismatch");
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(phi * s.basis().row(i));
  return Subspace::span(phi.field(), phi.rows(), gens);
}

}  // namespace dias
