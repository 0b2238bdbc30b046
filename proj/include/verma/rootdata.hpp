#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "verma/poly.hpp"
#include "verma/rational.hpp"

namespace verma {

using RootCoords = std::vector<long>;  // coordinates in the simple-root basis

// Cartan matrix plus symmetrizers for one finite series.
struct CartanDatum {
  char series = 'A';
  int rank = 1;
  std::vector<std::vector<long>> cartan;  // a_ij = <alpha_j, alpha_i^vee>
};

inline CartanDatum make_cartan(char series, int rank) {
  auto chain = [](int l) {
    std::vector<std::vector<long>> a(l, std::vector<long>(l, 0));
    for (int i = 0; i < l; ++i) {
      a[i][i] = 2;
      if (i + 1 < l) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  CartanDatum d{series, rank, {}};
  switch (series) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("rank out of range for A");
      d.cartan = chain(rank);
      break;
    case 'B':
      if (rank < 2) throw std::invalid_argument("rank out of range for B");
      d.cartan = chain(rank);
      d.cartan[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) throw std::invalid_argument("rank out of range for C");
      d.cartan = chain(rank);
      d.cartan[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 3) throw std::invalid_argument("rank out of range for D");
      d.cartan = chain(rank - 1);
      for (auto& row : d.cartan) row.push_back(0);
      d.cartan.push_back(std::vector<long>(rank, 0));
      d.cartan[rank - 1][rank - 1] = 2;
      d.cartan[rank - 1][rank - 3] = d.cartan[rank - 3][rank - 1] = -1;
      break;
    case 'E': {
      if (rank < 6 || rank > 8) throw std::invalid_argument("rank out of range for E");
      // Bourbaki numbering: chain 1-3-4-5-...-rank, node 2 attached to 4.
      std::vector<std::vector<long>> a(rank, std::vector<long>(rank, 0));
      for (int i = 0; i < rank; ++i) a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      d.cartan = a;
      break;
    }
    case 'F':
      if (rank != 4) throw std::invalid_argument("rank out of range for F");
      d.cartan = chain(4);
      d.cartan[2][1] = -2;
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("rank out of range for G");
      d.cartan = {{2, -3}, {-1, 2}};
      break;
    default:
      throw std::invalid_argument(std::string("unknown series '") + series + "'");
  }
  return d;
}

// "A2", "G2", ...
inline CartanDatum parse_cartan(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad series string: " + s);
  return make_cartan(s[0], std::stoi(s.substr(1)));
}

// Finite root system with the invariant form normalized so (theta|theta)=2,
// together with the affine bookkeeping (rho, dual Coxeter number).
class FiniteRootSystem {
 public:
  explicit FiniteRootSystem(const CartanDatum& datum) : datum_(datum) { build(); }

  int rank() const { return datum_.rank; }
  const CartanDatum& datum() const { return datum_; }
  const std::vector<RootCoords>& roots() const { return roots_; }
  const std::vector<RootCoords>& positive_roots() const { return positive_; }
  const RootCoords& theta() const { return theta_; }
  const Rat& hdual() const { return hdual_; }
  const std::vector<Rat>& symmetrizers() const { return d_; }

  // (alpha_i | alpha_j)
  const std::vector<std::vector<Rat>>& form_roots() const { return form_roots_; }
  // Form in fundamental-weight coordinates: (lam|mu) = m_lam^T W m_mu.
  const std::vector<std::vector<Rat>>& form_weights() const { return form_weights_; }

  bool is_root(const RootCoords& v) const { return root_set_.count(v) > 0; }

  // <beta, alpha_i^vee> for beta in root coordinates.
  long cartan_pairing(const RootCoords& beta, int i) const {
    long s = 0;
    for (int j = 0; j < rank(); ++j) s += datum_.cartan[i][j] * beta[j];
    return s;
  }

  Rat form_root_root(const RootCoords& a, const RootCoords& b) const {
    Rat s(0);
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) s += Rat(a[i]) * form_roots_[i][j] * Rat(b[j]);
    return s;
  }

  // Fundamental-weight coordinates <alpha, alpha_i^vee> of a root.
  std::vector<Rat> root_to_weight_coords(const RootCoords& a) const {
    std::vector<Rat> m(rank());
    for (int i = 0; i < rank(); ++i) m[i] = Rat(cartan_pairing(a, i));
    return m;
  }

  // Simple-root coordinates of a weight given in fundamental-weight coords.
  std::vector<Rat> weight_to_root_coords(const std::vector<Rat>& m) const {
    std::vector<Rat> c(rank(), Rat(0));
    for (int i = 0; i < rank(); ++i)
      for (int j = 0; j < rank(); ++j) c[i] += form_inv_[i][j] * d_[j] * m[j];
    return c;
  }

 private:
  void build() {
    int l = rank();
    const auto& a = datum_.cartan;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if ((a[i][j] == 0) != (a[j][i] == 0))
          throw std::invalid_argument("Cartan matrix not symmetrizable");
    // Symmetrizers up to scale: propagate d_j/d_i = a_ij/a_ji along edges.
    d_.assign(l, Rat(0));
    d_[0] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
          if (i != j && a[i][j] != 0 && d_[i] != 0 && d_[j] == 0) {
            d_[j] = d_[i] * Rat(a[i][j]) / Rat(a[j][i]);
            changed = true;
          }
    }
    for (const auto& x : d_)
      if (x == 0) throw std::invalid_argument("Cartan diagram not connected");

    // Close the simple roots under simple reflections.
    const size_t kMaxRoots = 240;  // largest finite count (E8)
    std::set<RootCoords> current;
    for (int i = 0; i < l; ++i) {
      RootCoords e(l, 0);
      e[i] = 1;
      current.insert(e);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<RootCoords> snapshot(current.begin(), current.end());
      for (const auto& beta : snapshot)
        for (int i = 0; i < l; ++i) {
          RootCoords r = beta;
          long p = cartan_pairing(beta, i);
          r[i] -= p;
          if (current.insert(r).second) grew = true;
        }
      if (current.size() > kMaxRoots)
        throw std::invalid_argument("reflection closure exceeds finite-type bound");
    }
    root_set_ = current;
    roots_.assign(current.begin(), current.end());
    for (const auto& r : roots_) {
      bool nonneg = std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; });
      if (nonneg) positive_.push_back(r);
    }

    // Highest root: dominates every positive root coefficientwise.
    for (const auto& cand : positive_) {
      bool top = true;
      for (const auto& q : positive_)
        for (int i = 0; i < l; ++i)
          if (cand[i] < q[i]) {
            top = false;
            break;
          }
      if (top) {
        theta_ = cand;
        break;
      }
    }
    if (theta_.empty()) throw std::logic_error("no highest root found");

    // Normalize so (theta|theta) = 2.
    Rat tt(0);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) tt += Rat(theta_[i]) * d_[i] * Rat(a[i][j]) * Rat(theta_[j]);
    Rat scale = Rat(2) / tt;
    for (auto& x : d_) x *= scale;

    form_roots_.assign(l, std::vector<Rat>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) form_roots_[i][j] = d_[i] * Rat(a[i][j]);
    form_inv_ = invert(form_roots_);
    form_weights_.assign(l, std::vector<Rat>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) form_weights_[i][j] = d_[i] * form_inv_[i][j] * d_[j];

    // h^vee = 1 + <rho_bar, theta^vee> = 1 + sum_j theta_j d_j  (since
    // (rho_bar|alpha_j) = d_j and (theta|theta) = 2).
    hdual_ = 1;
    for (int j = 0; j < l; ++j) hdual_ += Rat(theta_[j]) * d_[j];
  }

  static std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
    size_t n = a.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
      size_t piv = c;
      while (piv < n && a[piv][c] == 0) ++piv;
      if (piv == n) throw std::logic_error("singular form matrix");
      std::swap(a[c], a[piv]);
      std::swap(inv[c], inv[piv]);
      Rat f = a[c][c];
      for (size_t j = 0; j < n; ++j) {
        a[c][j] /= f;
        inv[c][j] /= f;
      }
      for (size_t i = 0; i < n; ++i) {
        if (i == c || a[i][c] == 0) continue;
        Rat g = a[i][c];
        for (size_t j = 0; j < n; ++j) {
          a[i][j] -= g * a[c][j];
          inv[i][j] -= g * inv[c][j];
        }
      }
    }
    return inv;
  }

  CartanDatum datum_;
  std::vector<Rat> d_;
  std::vector<RootCoords> roots_, positive_;
  std::set<RootCoords> root_set_;
  RootCoords theta_;
  Rat hdual_;
  std::vector<std::vector<Rat>> form_roots_, form_inv_, form_weights_;
};

inline FiniteRootSystem build_root_system(const CartanDatum& datum) {
  return FiniteRootSystem(datum);
}

// Element of the affine dual Cartan space, finite part stored in
// fundamental-weight coordinates <lam, alpha_i^vee>. The scalar type is Rat
// for honest weights and PolyT for one-parameter deformations lam + t*dir.
template <class S>
struct AffineWeight {
  std::vector<S> finite;
  S level{};  // coefficient of Lambda_0, equals lam(c)
  S ddeg{};   // coefficient of delta

  friend AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
    AffineWeight r = a;
    for (size_t i = 0; i < r.finite.size(); ++i) r.finite[i] += b.finite[i];
    r.level += b.level;
    r.ddeg += b.ddeg;
    return r;
  }
  friend AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
    AffineWeight r = a;
    for (size_t i = 0; i < r.finite.size(); ++i) r.finite[i] -= b.finite[i];
    r.level -= b.level;
    r.ddeg -= b.ddeg;
    return r;
  }
  friend bool operator==(const AffineWeight& a, const AffineWeight& b) {
    return a.finite == b.finite && a.level == b.level && a.ddeg == b.ddeg;
  }
};

using Weight = AffineWeight<Rat>;
using DeformedWeight = AffineWeight<PolyT>;

inline Weight make_weight(const FiniteRootSystem& sys, std::vector<Rat> finite, Rat level,
                          Rat ddeg = Rat(0)) {
  if (static_cast<int>(finite.size()) != sys.rank())
    throw std::invalid_argument("weight coordinate count does not match rank");
  return Weight{std::move(finite), std::move(level), std::move(ddeg)};
}

inline Weight weight_delta(const FiniteRootSystem& sys) {
  return Weight{std::vector<Rat>(sys.rank(), Rat(0)), Rat(0), Rat(1)};
}

inline Weight weight_lambda0(const FiniteRootSystem& sys) {
  return Weight{std::vector<Rat>(sys.rank(), Rat(0)), Rat(1), Rat(0)};
}

// rho = rho_bar + h^vee Lambda_0
inline Weight rho(const FiniteRootSystem& sys) {
  return Weight{std::vector<Rat>(sys.rank(), Rat(1)), sys.hdual(), Rat(0)};
}

inline Weight rho_bar(const FiniteRootSystem& sys) {
  return Weight{std::vector<Rat>(sys.rank(), Rat(1)), Rat(0), Rat(0)};
}

inline DeformedWeight deform(const Weight& lam, const Weight& dir) {
  DeformedWeight r;
  for (size_t i = 0; i < lam.finite.size(); ++i)
    r.finite.push_back(PolyT(lam.finite[i]) + PolyT::t() * PolyT(dir.finite[i]));
  r.level = PolyT(lam.level) + PolyT::t() * PolyT(dir.level);
  r.ddeg = PolyT(lam.ddeg) + PolyT::t() * PolyT(dir.ddeg);
  return r;
}

inline DeformedWeight as_deformed(const Weight& lam) {
  DeformedWeight r;
  for (const auto& x : lam.finite) r.finite.push_back(PolyT(x));
  r.level = PolyT(lam.level);
  r.ddeg = PolyT(lam.ddeg);
  return r;
}

inline Weight at_t_zero(const DeformedWeight& w) {
  Weight r;
  for (const auto& p : w.finite) r.finite.push_back(p.at_zero());
  r.level = w.level.at_zero();
  r.ddeg = w.ddeg.at_zero();
  return r;
}

// Real root alpha + n*delta or imaginary root n*delta.
struct AffineRoot {
  bool imaginary = false;
  RootCoords finite;  // empty when imaginary
  long n = 0;

  static AffineRoot real(RootCoords alpha, long n) { return {false, std::move(alpha), n}; }
  static AffineRoot imag(long n) {
    if (n == 0) throw std::invalid_argument("imaginary root needs n != 0");
    return {true, {}, n};
  }
  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.imaginary == b.imaginary && a.finite == b.finite && a.n == b.n;
  }
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    return std::tie(a.imaginary, a.n, a.finite) < std::tie(b.imaginary, b.n, b.finite);
  }
};

inline long mult(const FiniteRootSystem& sys, const AffineRoot& beta) {
  return beta.imaginary ? sys.rank() : 1;
}

inline Weight root_as_weight(const FiniteRootSystem& sys, const AffineRoot& beta) {
  Weight w{std::vector<Rat>(sys.rank(), Rat(0)), Rat(0), Rat(beta.n)};
  if (!beta.imaginary) w.finite = sys.root_to_weight_coords(beta.finite);
  return w;
}

// The invariant form (x|y) extended A-bilinearly to deformed weights.
template <class S>
S bilinear(const FiniteRootSystem& sys, const AffineWeight<S>& x, const AffineWeight<S>& y) {
  S acc{};
  const auto& w = sys.form_weights();
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = 0; j < sys.rank(); ++j) acc += x.finite[i] * S(w[i][j]) * y.finite[j];
  acc += x.level * y.ddeg;
  acc += x.ddeg * y.level;
  return acc;
}

// (beta|beta) of an affine root; zero for imaginary roots.
inline Rat root_norm(const FiniteRootSystem& sys, const AffineRoot& beta) {
  if (beta.imaginary) return Rat(0);
  return sys.form_root_root(beta.finite, beta.finite);
}

// <x, beta^vee> = 2(x|beta)/(beta|beta); only defined for real beta.
template <class S>
S coroot_pairing(const FiniteRootSystem& sys, const AffineWeight<S>& x, const AffineRoot& beta) {
  if (beta.imaginary)
    throw std::invalid_argument("coroot_pairing: imaginary root has no coroot");
  Rat nn = root_norm(sys, beta);
  S b = bilinear(sys, x, [&] {
    Weight w = root_as_weight(sys, beta);
    AffineWeight<S> ws;
    for (const auto& c : w.finite) ws.finite.push_back(S(c));
    ws.level = S(w.level);
    ws.ddeg = S(w.ddeg);
    return ws;
  }());
  return b * S(Rat(2) / nn);
}

}  // namespace verma
