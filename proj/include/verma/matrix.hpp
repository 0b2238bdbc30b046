#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "verma/poly.hpp"
#include "verma/ratfunc.hpp"

namespace verma {

// Rectangular matrix over Q[t] with opaque basis tags on rows and columns.
struct LocalMatrix {
  std::vector<std::vector<PolyT>> entries;
  std::vector<std::string> row_labels;  // optional, empty if untagged
  std::vector<std::string> col_labels;

  LocalMatrix() = default;
  LocalMatrix(size_t rows, size_t cols)
      : entries(rows, std::vector<PolyT>(cols)) {}

  size_t rows() const { return entries.size(); }
  size_t cols() const { return entries.empty() ? 0 : entries[0].size(); }
  PolyT& at(size_t i, size_t j) { return entries[i][j]; }
  const PolyT& at(size_t i, size_t j) const { return entries[i][j]; }
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline PolyT det_exact(const LocalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_exact: non-square matrix");
  size_t n = m.rows();
  if (n == 0) return PolyT(1);
  auto a = m.entries;
  PolyT prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t piv = k;
      while (piv < n && a[piv][k].is_zero()) ++piv;
      if (piv == n) return PolyT();
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = PolyT();
    }
    prev = a[k][k];
  }
  PolyT d = a[n - 1][n - 1];
  return sign == 1 ? d : -d;
}

// Kernel of A x = 0 over Q(t); returns a basis of column vectors.
inline std::vector<std::vector<RatFunc>> kernel_basis(
    const std::vector<std::vector<RatFunc>>& a_in) {
  auto a = a_in;
  size_t rows = a.size();
  size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<long> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    RatFunc inv = RatFunc(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      RatFunc f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  std::vector<std::vector<RatFunc>> basis;
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<RatFunc> v(cols, RatFunc(0));
    v[c] = RatFunc(1);
    for (size_t k = 0; k < pivot_col.size(); ++k) v[pivot_col[k]] = -a[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Clears denominators (units or not) and t-content; rational content reduced
// so entries are primitive integer-coefficient polynomials up to sign.
inline std::vector<PolyT> primitive_poly_vector(const std::vector<RatFunc>& v) {
  PolyT den(1);
  for (const auto& x : v)
    if (!x.is_zero()) den = den * (x.den() / poly_gcd(den, x.den()));
  std::vector<PolyT> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.num() * (den / x.den()));
  long tmin = -1;
  for (const auto& p : out) {
    auto o = ord_t(p);
    if (o) tmin = tmin < 0 ? *o : std::min(tmin, *o);
  }
  if (tmin > 0) {
    PolyT tp = PolyT::t(tmin);
    for (auto& p : out) p = p / tp;
  }
  Int num_gcd(0);
  Int den_lcm(1);
  for (const auto& p : out)
    for (const auto& c : p.coeffs()) {
      num_gcd = gcd(num_gcd, numerator(c));
      den_lcm = lcm(den_lcm, denominator(c));
    }
  if (num_gcd != 0) {
    Rat f = Rat(den_lcm, num_gcd);
    for (auto& p : out) {
      std::vector<Rat> c = p.coeffs();
      for (auto& x : c) x *= f;
      p = PolyT(std::move(c));
    }
  }
  return out;
}

struct LocalSmithResult {
  std::vector<long> divisor_ords;                 // ord_t of the diagonal pivots
  std::vector<std::vector<RatFunc>> basis_rows;   // first rank rows span the saturation
  size_t rank() const { return divisor_ords.size(); }
};

// Smith reduction over the local ring Q[t]_(t) (a DVR): row and column
// operations with unit shears, pivoting on the entry of minimal ord_t.
// basis_rows holds the rows of V^{-1} so that rows 0..rank-1 span the
// saturation of the row span inside the ambient lattice.
inline LocalSmithResult local_smith(const LocalMatrix& m, size_t ambient_dim) {
  size_t r = m.rows();
  size_t n = ambient_dim;
  if (r > 0 && m.cols() != n)
    throw std::invalid_argument("local_smith: ambient dimension mismatch");
  std::vector<std::vector<RatFunc>> a(r, std::vector<RatFunc>(n));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = RatFunc(m.entries[i][j]);
  std::vector<std::vector<RatFunc>> w(n, std::vector<RatFunc>(n, RatFunc(0)));
  for (size_t i = 0; i < n; ++i) w[i][i] = RatFunc(1);

  LocalSmithResult res;
  size_t k = 0;
  while (k < r && k < n) {
    long best = -1;
    size_t bi = 0, bj = 0;
    for (size_t i = k; i < r; ++i)
      for (size_t j = k; j < n; ++j) {
        auto o = a[i][j].ord();
        if (o && (best < 0 || *o < best)) {
          best = *o;
          bi = i;
          bj = j;
        }
      }
    if (best < 0) break;
    std::swap(a[k], a[bi]);
    if (bj != k) {
      for (size_t i = 0; i < r; ++i) std::swap(a[i][k], a[i][bj]);
      std::swap(w[k], w[bj]);
    }
    RatFunc pivot = a[k][k];
    for (size_t i = k + 1; i < r; ++i) {
      if (a[i][k].is_zero()) continue;
      RatFunc f = a[i][k] / pivot;
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (size_t j = k + 1; j < n; ++j) {
      if (a[k][j].is_zero()) continue;
      RatFunc f = a[k][j] / pivot;
      for (size_t i = 0; i < r; ++i) a[i][j] -= f * a[i][k];
      for (size_t b = 0; b < n; ++b) w[k][b] += f * w[j][b];
    }
    res.divisor_ords.push_back(best);
    ++k;
  }
  res.basis_rows = std::move(w);
  return res;
}

// Basis of the t-saturation of the row span inside the ambient lattice
// over the local ring at (t). Rows come back as primitive Q[t] vectors.
inline LocalMatrix saturate_at_t(const LocalMatrix& span, size_t ambient_dim) {
  LocalSmithResult s = local_smith(span, ambient_dim);
  LocalMatrix out(s.rank(), ambient_dim);
  for (size_t i = 0; i < s.rank(); ++i) out.entries[i] = primitive_poly_vector(s.basis_rows[i]);
  return out;
}

// ord_t of the Gram determinant induced on a lattice complement of the
// submodule. The submodule must be t-saturated and lie in the radical of
// the form over Q(t); any complement choice differs by a local unit.
inline OrdT complement_gram_ord(const LocalMatrix& gram, const LocalMatrix& sub) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("complement_gram_ord: gram not square");
  size_t n = gram.rows();
  size_t r = sub.rows();
  if (r > 0 && sub.cols() != n)
    throw std::invalid_argument("complement_gram_ord: dimension mismatch");
  std::vector<bool> is_pivot(n, false);
  if (r > 0) {
    LocalSmithResult s = local_smith(sub, n);
    if (s.rank() != r)
      throw std::invalid_argument("complement_gram_ord: submodule basis not independent");
    for (long d : s.divisor_ords)
      if (d != 0) throw std::invalid_argument("complement_gram_ord: submodule not t-saturated");
    // Unit-pivot echelon pass to locate the submodule's pivot columns.
    std::vector<std::vector<RatFunc>> a(r, std::vector<RatFunc>(n));
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = RatFunc(sub.entries[i][j]);
    for (size_t k = 0; k < r; ++k) {
      long best = -1;
      size_t bi = 0, bj = 0;
      for (size_t i = k; i < r; ++i)
        for (size_t j = 0; j < n; ++j) {
          if (is_pivot[j]) continue;
          auto o = a[i][j].ord();
          if (o && (best < 0 || *o < best)) {
            best = *o;
            bi = i;
            bj = j;
          }
        }
      if (best != 0)
        throw std::invalid_argument("complement_gram_ord: submodule not t-saturated");
      std::swap(a[k], a[bi]);
      is_pivot[bj] = true;
      for (size_t i = k + 1; i < r; ++i) {
        if (a[i][bj].is_zero()) continue;
        RatFunc f = a[i][bj] / a[k][bj];
        for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      }
    }
  }
  LocalMatrix induced(n - r, n - r);
  std::vector<size_t> comp;
  for (size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) comp.push_back(j);
  for (size_t i = 0; i < comp.size(); ++i)
    for (size_t j = 0; j < comp.size(); ++j) induced.entries[i][j] = gram.entries[comp[i]][comp[j]];
  return ord_t(det_exact(induced));
}

}  // namespace verma
