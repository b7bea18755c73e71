#include "dias/sequences.hpp"

#include <stdexcept>

#include "dias/errors.hpp"

namespace dias {

namespace {

ExactnessVerdict kernel_equals_image(const std::string& at, const std::string& claim,
                                     const Matrix& outgoing, const Matrix& incoming) {
  return {at, claim, kernel(outgoing) == image(incoming)};
}

std::vector<std::size_t> free_columns(const Subspace& s) {
  std::vector<char> is_pivot(s.ambient_dim(), 0);
  for (auto p : s.pivots()) is_pivot[p] = 1;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < s.ambient_dim(); ++c) {
    if (!is_pivot[c]) out.push_back(c);
  }
  return out;
}

Matrix columns_to_matrix(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols) {
  return Matrix::from_columns(f, rows, cols);
}

}  // namespace

bool SequenceReport::exact() const {
  for (const auto& v : verdicts) {
    if (!v.holds) return false;
  }
  return true;
}

SequenceNode make_node(std::string name, Matrix map) {
  SequenceNode node;
  node.name = std::move(name);
  node.rank = rank(map);
  node.kernel_dim = map.cols() - node.rank;
  node.map = std::move(map);
  return node;
}

LowDegreeSequence::LowDegreeSequence(const DiasAlgebra& L, const Subspace& H,
                                     std::optional<CohomologySpace> h2_total)
    : ideal_(H), ext_(extension_cocycle_data(L, H)) {
  const FieldSpec& f = L.field();
  const std::size_t n = L.dim();
  const std::size_t h = H.dim();
  const Quotient& q = ext_.quotient;
  const std::size_t qd = q.algebra.dim();

  hom_total_ = hom_space(L, 1);
  hom_quotient_ = hom_space(q.algebra, 1);
  h2_total_ = h2_total ? std::move(*h2_total) : h2(L, 1);
  h2_quotient_ = h2(q.algebra, 1);

  // Inf1(χ) = χ∘β
  std::vector<Vector> cols;
  for (std::size_t r = 0; r < hom_quotient_.dim(); ++r) {
    Vector chi = hom_quotient_.basis_vector(r);
    Vector pulled = zero_vector(f, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < qd; ++a) {
        if (!chi[a].is_zero() && !q.projection(a, i).is_zero()) pulled[i] += chi[a] * q.projection(a, i);
      }
    }
    auto coords = hom_total_.coordinates(pulled);
    if (!coords) throw std::logic_error("Inf1 image left Hom(L, F)");
    cols.push_back(std::move(*coords));
  }
  inf1_ = columns_to_matrix(f, hom_total_.dim(), cols);

  // Res(φ) = φ∘ι, in the dual basis of H's echelon basis.
  cols.clear();
  for (std::size_t r = 0; r < hom_total_.dim(); ++r) {
    Vector phi = hom_total_.basis_vector(r);
    Vector restricted;
    for (std::size_t s = 0; s < h; ++s) restricted.push_back(dot(phi, H.basis().row(s)));
    cols.push_back(std::move(restricted));
  }
  res_ = columns_to_matrix(f, h, cols);

  // Tra(χ) = class of χ∘f for the extension cocycle f.
  cols.clear();
  for (std::size_t s = 0; s < h; ++s) {
    Matrix chi(f, 1, h);
    chi(0, s) = Scalar::one(f);
    cols.push_back(class_coordinates(h2_quotient_, compose(chi, ext_.cocycle)));
  }
  tra_ = columns_to_matrix(f, h2_quotient_.dim(), cols);

  // Inf2(class of g) = class of g∘(β x β).
  cols.clear();
  for (const auto& g : h2_quotient_.reps()) {
    cols.push_back(class_coordinates(h2_total_, pullback(g, q.projection)));
  }
  inf2_ = columns_to_matrix(f, h2_total_.dim(), cols);

  delta_ = delta_map(L, H, h2_total_);
}

SequenceReport LowDegreeSequence::verify() const {
  SequenceReport report;
  report.nodes.push_back(make_node("Inf1", inf1_));
  report.nodes.push_back(make_node("Res", res_));
  report.nodes.push_back(make_node("Tra", tra_));
  report.nodes.push_back(make_node("Inf2", inf2_));
  report.nodes.push_back(make_node("delta", delta_));
  report.verdicts.push_back(
      {"Hom(L/H,F)", "Inf1 injective", report.nodes[0].kernel_dim == 0});
  report.verdicts.push_back(kernel_equals_image("Hom(L,F)", "ker Res = im Inf1", res_, inf1_));
  report.verdicts.push_back(kernel_equals_image("Hom(H,F)", "ker Tra = im Res", tra_, res_));
  report.verdicts.push_back(kernel_equals_image("H2(L/H,F)", "ker Inf2 = im Tra", inf2_, tra_));
  report.verdicts.push_back(kernel_equals_image("H2(L,F)", "ker delta = im Inf2", delta_, inf2_));
  return report;
}

Matrix inf1(const DiasAlgebra& L, const Subspace& H) { return LowDegreeSequence(L, H).inf1(); }
Matrix res(const DiasAlgebra& L, const Subspace& H) { return LowDegreeSequence(L, H).res(); }
Matrix tra(const DiasAlgebra& L, const Subspace& H) { return LowDegreeSequence(L, H).tra(); }
Matrix inf2(const DiasAlgebra& L, const Subspace& H) { return LowDegreeSequence(L, H).inf2(); }

Matrix delta_map(const DiasAlgebra& L, const Subspace& Z, const CohomologySpace& h2_total) {
  if (!is_central_ideal(L, Z)) throw NotCentralIdeal("delta_map: not a central ideal");
  if (h2_total.base_dim() != L.dim() || h2_total.coeff_dim() != 1) {
    throw ShapeError("delta_map: cohomology space does not belong to H²(L, F)");
  }
  const FieldSpec& f = L.field();
  const std::size_t n = L.dim();
  const Subspace derived = derived_subalgebra(L);
  const auto abel = free_columns(derived);  // representatives of L/L'
  const std::size_t qa = abel.size();
  const std::size_t zd = Z.dim();
  const std::size_t block = qa * zd;

  std::vector<Vector> zs = Z.basis_vectors();
  std::vector<Vector> xs;
  for (auto c : abel) xs.push_back(unit_vector(f, n, c));

  std::vector<Vector> cols;
  for (const auto& rep : h2_total.reps()) {
    // Each form must vanish when L' meets Z on either side.
    for (std::size_t r = 0; r < derived.dim(); ++r) {
      Vector y = derived.basis_vector(r);
      for (const auto& z : zs) {
        for (Product p : kProducts) {
          if (!is_zero(rep.evaluate(p, y, z)) || !is_zero(rep.evaluate(p, z, y))) {
            throw std::logic_error("delta_map: cocycle does not vanish on L' x Z");
          }
        }
      }
    }
    Vector col = zero_vector(f, 4 * block);
    for (std::size_t a = 0; a < qa; ++a) {
      for (std::size_t s = 0; s < zd; ++s) {
        col[0 * block + a * zd + s] = rep.evaluate(Product::left, xs[a], zs[s])[0];
        col[1 * block + s * qa + a] = rep.evaluate(Product::left, zs[s], xs[a])[0];
        col[2 * block + a * zd + s] = rep.evaluate(Product::right, xs[a], zs[s])[0];
        col[3 * block + s * qa + a] = rep.evaluate(Product::right, zs[s], xs[a])[0];
      }
    }
    cols.push_back(std::move(col));
  }
  return Matrix::from_columns(f, 4 * block, cols);
}

Matrix delta_map(const DiasAlgebra& L, const Subspace& Z) {
  if (!is_central_ideal(L, Z)) throw NotCentralIdeal("delta_map: not a central ideal");
  return delta_map(L, Z, h2(L, 1));
}

SequenceReport verify_five_term(const DiasAlgebra& L, const Subspace& H) {
  return LowDegreeSequence(L, H).verify();
}

}  // namespace dias
