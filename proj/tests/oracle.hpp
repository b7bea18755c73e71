// Naive reference computations for the test suite. Everything here works on
// plain dense arrays with its own elimination, and reads an algebra only
// through its structure constants. No library linear algebra is used.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "dias/algebra.hpp"

namespace oracle {

// An element of Q or GF(p), p == 0 meaning Q.
struct Num {
  mpq_class q;
  std::uint64_t p = 0;

  static Num make(std::uint64_t p, long v) {
    Num n;
    n.p = p;
    if (p == 0) {
      n.q = v;
    } else {
      long r = v % static_cast<long>(p);
      n.q = r < 0 ? r + static_cast<long>(p) : r;
    }
    return n;
  }
  bool zero() const { return q == 0; }
  Num norm(mpq_class v) const {
    Num n;
    n.p = p;
    if (p == 0) {
      n.q = v;
    } else {
      mpz_class r = v.get_num() % mpz_class(static_cast<unsigned long>(p));
      if (r < 0) r += static_cast<unsigned long>(p);
      n.q = r;
    }
    return n;
  }
  Num operator+(const Num& o) const { return norm(q + o.q); }
  Num operator-(const Num& o) const { return norm(q - o.q); }
  Num operator*(const Num& o) const { return norm(q * o.q); }
  Num inv() const {
    if (p == 0) return norm(1 / q);
    mpz_class r;
    mpz_class a = q.get_num();
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mpz_class(static_cast<unsigned long>(p)).get_mpz_t());
    return norm(mpq_class(r));
  }
};

using Row = std::vector<Num>;
using Mat = std::vector<Row>;

inline Num from_scalar(const dias::Scalar& s) {
  Num n;
  n.p = s.field().is_rational() ? 0 : s.field().modulus();
  n.q = mpq_class(s.to_string());
  return n;
}

// Textbook Gaussian elimination, returns the rank; `m` is consumed.
inline std::size_t rank(Mat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Num inv = m[r][c].inv();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].zero()) continue;
      Num f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    ++r;
  }
  return r;
}

// Basis of {v : m v = 0}.
inline Mat nullspace(Mat m, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Num inv = m[r][c].inv();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].zero()) continue;
      Num f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] = m[i][k] - f * m[r][k];
    }
    pivcol.push_back(c);
    ++r;
  }
  Mat out;
  std::vector<bool> is_piv(cols, false);
  for (auto c : pivcol) is_piv[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Row v(cols, Num::make(p, 0));
    v[free] = Num::make(p, 1);
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = Num::make(p, 0) - m[i][free];
    out.push_back(v);
  }
  return out;
}

// Dense copy of both structure tensors: T[p][i][j][k].
struct Dense {
  std::size_t n = 0;
  std::uint64_t p = 0;
  std::vector<std::vector<Row>> t[2];

  explicit Dense(const dias::DiasAlgebra& L) : n(L.dim()) {
    p = L.field().is_rational() ? 0 : L.field().modulus();
    for (int s = 0; s < 2; ++s) {
      const auto& ten = L.tensor(s == 0 ? dias::Product::left : dias::Product::right);
      t[s].assign(n, std::vector<Row>(n, Row(n, Num::make(p, 0))));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) t[s][i][j][k] = from_scalar(ten(i, j, k));
    }
  }
  Num z() const { return Num::make(p, 0); }
  Row mul(int s, const Row& x, const Row& y) const {
    Row out(n, z());
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].zero()) continue;
        Num c = x[i] * y[j];
        for (std::size_t k = 0; k < n; ++k) out[k] = out[k] + c * t[s][i][j][k];
      }
    }
    return out;
  }
  Row unit(std::size_t i) const {
    Row v(n, z());
    v[i] = Num::make(p, 1);
    return v;
  }
};

inline Row sub(const Row& a, const Row& b) {
  Row out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline bool row_zero(const Row& r) {
  for (const auto& x : r)
    if (!x.zero()) return false;
  return true;
}

// Residues of the five identities at one triple, in the order
// (x⊣y)⊣z-x⊣(y⊣z), (x⊢y)⊢z-x⊢(y⊢z), x⊣(y⊣z)-x⊣(y⊢z), (x⊢y)⊣z-x⊢(y⊣z),
// (x⊣y)⊢z-(x⊢y)⊢z. 0 is ⊣ and 1 is ⊢.
inline std::vector<Row> identity_residues(const Dense& A, const Row& x, const Row& y, const Row& w) {
  return {sub(A.mul(0, A.mul(0, x, y), w), A.mul(0, x, A.mul(0, y, w))),
          sub(A.mul(1, A.mul(1, x, y), w), A.mul(1, x, A.mul(1, y, w))),
          sub(A.mul(0, x, A.mul(0, y, w)), A.mul(0, x, A.mul(1, y, w))),
          sub(A.mul(0, A.mul(1, x, y), w), A.mul(1, x, A.mul(0, y, w))),
          sub(A.mul(1, A.mul(0, x, y), w), A.mul(1, A.mul(1, x, y), w))};
}

// Number of failing basis triples per identity.
inline std::vector<std::size_t> violation_counts(const dias::DiasAlgebra& L) {
  Dense A(L);
  std::vector<std::size_t> counts(5, 0);
  for (std::size_t i = 0; i < A.n; ++i)
    for (std::size_t j = 0; j < A.n; ++j)
      for (std::size_t k = 0; k < A.n; ++k) {
        auto res = identity_residues(A, A.unit(i), A.unit(j), A.unit(k));
        for (std::size_t a = 0; a < 5; ++a) counts[a] += row_zero(res[a]) ? 0 : 1;
      }
  return counts;
}

inline std::size_t derived_dim(const dias::DiasAlgebra& L) {
  Dense A(L);
  Mat rows;
  for (int s = 0; s < 2; ++s)
    for (std::size_t i = 0; i < A.n; ++i)
      for (std::size_t j = 0; j < A.n; ++j) rows.push_back(A.t[s][i][j]);
  return rank(rows);
}

inline std::size_t center_dim(const dias::DiasAlgebra& L) {
  Dense A(L);
  // z = Σ c_a e_a with e_i*z = z*e_i = 0: one row per (s, side, i, k).
  Mat rows;
  for (int s = 0; s < 2; ++s)
    for (std::size_t i = 0; i < A.n; ++i)
      for (std::size_t k = 0; k < A.n; ++k) {
        Row r1(A.n), r2(A.n);
        for (std::size_t a = 0; a < A.n; ++a) {
          r1[a] = A.t[s][i][a][k];
          r2[a] = A.t[s][a][i][k];
        }
        rows.push_back(r1);
        rows.push_back(r2);
      }
  return A.n - rank(rows);
}

// Unknowns: f_s(i, j)_a at ((s*n + i)*n + j)*m + a. The constraint matrix
// comes from expanding the five identities in E = F^m ⊕ L with
// (u, x)*(v, y) = (f(x, y), x*y) and reading off the F^m component,
// which is linear in f. Column u is built by setting f = e_u.
struct CochainSystem {
  std::size_t n, m, unknowns;
  std::uint64_t p;
  Mat constraints;  // rows = equations
};

inline CochainSystem cochain_system(const dias::DiasAlgebra& L, std::size_t m) {
  Dense A(L);
  const std::size_t n = A.n;
  CochainSystem sys{n, m, 2 * n * n * m, A.p, {}};
  const std::size_t eqs = 5 * n * n * n * m;
  sys.constraints.assign(eqs, Row(sys.unknowns, A.z()));
  for (std::size_t u = 0; u < sys.unknowns; ++u) {
    const std::size_t a = u % m;
    const std::size_t j = (u / m) % n;
    const std::size_t i = (u / m / n) % n;
    const int s = static_cast<int>(u / m / n / n);
    // Extension E with the single cochain e_u: coordinates m..m+n-1 hold L.
    const std::size_t N = m + n;
    auto emul = [&](int t, const Row& x, const Row& y) {
      Row out(N, A.z());
      Row xl(x.begin() + m, x.end()), yl(y.begin() + m, y.end());
      Row prod = A.mul(t, xl, yl);
      for (std::size_t k = 0; k < n; ++k) out[m + k] = prod[k];
      if (t == s) out[a] = xl[i] * yl[j];
      return out;
    };
    auto unitN = [&](std::size_t k) {
      Row v(N, A.z());
      v[m + k] = Num::make(A.p, 1);
      return v;
    };
    std::size_t e = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t w = 0; w < n; ++w) {
          Row X = unitN(x), Y = unitN(y), W = unitN(w);
          std::vector<Row> res = {
              sub(emul(0, emul(0, X, Y), W), emul(0, X, emul(0, Y, W))),
              sub(emul(1, emul(1, X, Y), W), emul(1, X, emul(1, Y, W))),
              sub(emul(0, X, emul(0, Y, W)), emul(0, X, emul(1, Y, W))),
              sub(emul(0, emul(1, X, Y), W), emul(1, X, emul(0, Y, W))),
              sub(emul(1, emul(0, X, Y), W), emul(1, emul(1, X, Y), W))};
          for (const auto& r : res)
            for (std::size_t b = 0; b < m; ++b) sys.constraints[e++][u] = r[b];
        }
  }
  return sys;
}

// Coboundaries of ε: L -> F^m, ε(e_l)_a = δ. Each generator is a row over
// the cochain unknowns, value -ε(x_i * x_j).
inline Mat coboundary_rows(const dias::DiasAlgebra& L, std::size_t m) {
  Dense A(L);
  const std::size_t n = A.n;
  Mat rows;
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t a = 0; a < m; ++a) {
      Row r(2 * n * n * m, A.z());
      for (int s = 0; s < 2; ++s)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) r[((s * n + i) * n + j) * m + a] = A.z() - A.t[s][i][j][l];
      rows.push_back(r);
    }
  return rows;
}

inline std::size_t cocycle_dim(const dias::DiasAlgebra& L, std::size_t m) {
  auto sys = cochain_system(L, m);
  return sys.unknowns - rank(sys.constraints);
}

inline std::size_t coboundary_dim(const dias::DiasAlgebra& L, std::size_t m) {
  return rank(coboundary_rows(L, m));
}

inline std::size_t h2_dim(const dias::DiasAlgebra& L, std::size_t m) {
  return cocycle_dim(L, m) - coboundary_dim(L, m);
}

// dim of the image of H²(L/H) -> H²(L): cocycles on L that vanish whenever
// one argument lies in H, taken modulo B²(L). H is given by spanning rows.
inline std::size_t inflation_rank(const dias::DiasAlgebra& L, const Mat& H) {
  auto sys = cochain_system(L, 1);
  const std::size_t n = L.dim();
  Mat c = sys.constraints;
  for (int s = 0; s < 2; ++s)
    for (const auto& h : H)
      for (std::size_t x = 0; x < n; ++x) {
        Row r1(sys.unknowns, Num::make(sys.p, 0)), r2 = r1;
        for (std::size_t y = 0; y < n; ++y) {
          r1[(s * n + y) * n + x] = h[y];  // f(h, x_x)
          r2[(s * n + x) * n + y] = h[y];  // f(x_x, h)
        }
        c.push_back(r1);
        c.push_back(r2);
      }
  Mat z = nullspace(c, sys.unknowns, sys.p);
  Mat b = coboundary_rows(L, 1);
  const std::size_t rb = rank(b);
  for (auto& r : z) b.push_back(r);
  return rank(b) - rb;
}

}  // namespace oracle
