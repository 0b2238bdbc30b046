#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "verma/boxcoords.hpp"
#include "verma/charbox.hpp"
#include "verma/matrix.hpp"
#include "verma/poly.hpp"
#include "verma/rootdata.hpp"
#include "verma/weylcalc.hpp"

namespace verma {

using Mat = std::vector<std::vector<Rat>>;

inline Mat mat_zero(int n) { return Mat(n, std::vector<Rat>(n, Rat(0))); }

inline bool mat_is_zero(const Mat& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat c = mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Mat mat_bracket(const Mat& a, const Mat& b) {
  Mat ab = mat_mul(a, b), ba = mat_mul(b, a);
  for (size_t i = 0; i < ab.size(); ++i)
    for (size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
  return ab;
}

inline Rat mat_trace_form(const Mat& a, const Mat& b) {
  Rat s(0);
  int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) s += a[i][k] * b[k][i];
  return s;
}

inline Mat mat_neg_transpose(const Mat& a) {
  int n = static_cast<int>(a.size());
  Mat c = mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = -a[j][i];
  return c;
}

// Element x (tensor) t^loop of the loop algebra, x of pure finite weight.
// The finite weight is tracked in simple-root coordinates; empty product
// means the zero element.
struct LoopElement {
  Mat m;
  std::vector<long> weight;  // root coordinates; all zero for Cartan
  long loop = 0;
};

// PBW monomial: generator ids in nondecreasing order.
using Monomial = std::vector<int>;
using VecQ = std::map<Monomial, Rat>;    // U(n_minus) combination, rational coeffs
using VecP = std::map<Monomial, PolyT>;  // deformed module vector

inline void vecq_add(VecQ& acc, const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = acc.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

inline void vecp_add(VecP& acc, const Monomial& m, const PolyT& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// The affine Lie algebra of an A-series system realized on sl(rank+1) matrix
// units, with the invariant form normalized by the trace form (so that
// (theta|theta)=2), together with PBW straightening in U(n_minus).
class LoopAlgebra {
 public:
  struct Gen {
    LoopElement elem;     // the generator itself (negative affine weight)
    BoxCoords beta;       // the positive affine root it lowers by
    int color = 0;        // Cartan index for imaginary generators
  };

  LoopAlgebra(const FiniteRootSystem& sys, long loop_depth)
      : sys_(sys), n_(sys.rank() + 1), depth_(loop_depth) {
    if (sys.datum().series != 'A')
      throw std::invalid_argument("oracle: structure constants only realized for the A series");
    build_tables();
  }

  const FiniteRootSystem& system() const { return sys_; }
  int dim_finite() const { return n_; }
  long depth() const { return depth_; }
  const std::vector<Gen>& gens() const { return gens_; }

  Mat unit(int i, int j) const {
    Mat e = mat_zero(n_);
    e[i][j] = 1;
    return e;
  }

  Mat cartan_h(int i) const {  // h_i = e_ii - e_{i+1,i+1}
    Mat h = mat_zero(n_);
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    return h;
  }

  std::vector<long> unit_weight(int i, int j) const {  // weight of e_ij
    std::vector<long> w(sys_.rank(), 0);
    for (int k = std::min(i, j); k < std::max(i, j); ++k) w[k] = i < j ? 1 : -1;
    return w;
  }

  // [a, b] in the affine algebra; the central coefficient comes back
  // separately since c is not a loop element.
  std::pair<LoopElement, Rat> bracket(const LoopElement& a, const LoopElement& b) const {
    LoopElement r;
    r.m = mat_bracket(a.m, b.m);
    r.weight = a.weight;
    for (size_t i = 0; i < r.weight.size(); ++i) r.weight[i] += b.weight[i];
    r.loop = a.loop + b.loop;
    Rat central(0);
    if (a.loop + b.loop == 0) central = Rat(a.loop) * mat_trace_form(a.m, b.m);
    return {r, central};
  }

  // Chevalley involution: x (tensor) t^n -> -x^T (tensor) t^{-n}.
  LoopElement involution(const LoopElement& a) const {
    LoopElement r;
    r.m = mat_neg_transpose(a.m);
    r.weight = a.weight;
    for (auto& x : r.weight) x = -x;
    r.loop = -a.loop;
    return r;
  }

  // Transpose anti-automorphism: x (tensor) t^n -> x^T (tensor) t^{-n},
  // fixing c. This is the symmetry defining the contravariant form.
  LoopElement transpose(const LoopElement& a) const {
    LoopElement r = involution(a);
    for (auto& row : r.m)
      for (auto& x : row) x = -x;
    return r;
  }

  bool in_n_minus(const LoopElement& a) const {
    if (a.loop < 0) return true;
    if (a.loop > 0) return false;
    bool nonzero = false;
    for (long x : a.weight) {
      if (x > 0) return false;
      if (x < 0) nonzero = true;
    }
    return nonzero;
  }

  bool is_cartan_zero(const LoopElement& a) const {
    if (a.loop != 0) return false;
    for (long x : a.weight)
      if (x != 0) return false;
    return true;
  }

  // Decomposes a pure-weight element of n_minus over the generator table.
  std::vector<std::pair<int, Rat>> decompose(const LoopElement& a) const {
    std::vector<std::pair<int, Rat>> out;
    if (mat_is_zero(a.m)) return out;
    bool zero_weight = true;
    for (long x : a.weight) zero_weight = zero_weight && x == 0;
    if (zero_weight) {
      // Diagonal traceless: partial sums give the h_i coordinates.
      Rat acc(0);
      for (int i = 0; i < sys_.rank(); ++i) {
        acc += a.m[i][i];
        if (acc != 0) out.push_back({gen_id_imag(-a.loop, i), acc});
      }
    } else {
      auto it = unit_index_.find(a.weight);
      if (it == unit_index_.end()) throw std::logic_error("decompose: weight is not a root");
      auto [i, j] = it->second;
      if (a.m[i][j] != 0) out.push_back({gen_id_real(a.weight, -a.loop), a.m[i][j]});
    }
    return out;
  }

  // Straightening: generator times a canonical monomial inside U(n_minus).
  const VecQ& mul_gen(int g, const Monomial& mono) {
    auto key = std::make_pair(g, mono);
    auto it = straighten_.find(key);
    if (it != straighten_.end()) return it->second;
    VecQ out;
    if (mono.empty() || g <= mono.front()) {
      Monomial m;
      m.reserve(mono.size() + 1);
      m.push_back(g);
      m.insert(m.end(), mono.begin(), mono.end());
      vecq_add(out, m, Rat(1));
    } else {
      int g1 = mono.front();
      Monomial rest(mono.begin() + 1, mono.end());
      for (const auto& [m2, c] : mul_gen(g, rest))
        for (const auto& [m3, c3] : mul_gen(g1, m2)) vecq_add(out, m3, c * c3);
      auto [br, central] = bracket(gens_[g].elem, gens_[g1].elem);
      if (central != 0) throw std::logic_error("central term inside U(n_minus)");
      for (const auto& [g2, c2] : decompose(br))
        for (const auto& [m3, c3] : mul_gen(g2, rest)) vecq_add(out, m3, c2 * c3);
    }
    auto [slot, _] = straighten_.emplace(std::move(key), std::move(out));
    return slot->second;
  }

  VecP apply_gen(int g, const VecP& v) {
    VecP out;
    for (const auto& [mono, coeff] : v)
      for (const auto& [m2, c2] : mul_gen(g, mono)) vecp_add(out, m2, coeff * PolyT(c2));
    return out;
  }

  BoxCoords monomial_coords(const Monomial& m) const {
    BoxCoords bc = BoxCoords::zero(sys_.rank());
    for (int g : m) bc = bc + gens_[g].beta;
    return bc;
  }

  // All canonical monomials of the given weight depth.
  std::vector<Monomial> monomials_of_weight(const BoxCoords& nu) const {
    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, size_t idx, const BoxCoords& rem) -> void {
      if (rem.is_zero()) {
        out.push_back(cur);
        return;
      }
      if (idx == gens_.size()) return;
      self(self, idx + 1, rem);
      BoxCoords left = rem - gens_[idx].beta;
      if (left.nonneg()) {
        cur.push_back(static_cast<int>(idx));
        self(self, idx, left);
        cur.pop_back();
      }
    };
    rec(rec, 0, nu);
    std::sort(out.begin(), out.end());
    return out;
  }

  int gen_id_real(const std::vector<long>& weight, long loop_up) const {
    auto it = real_index_.find({weight, loop_up});
    if (it == real_index_.end()) throw std::logic_error("generator out of loop depth");
    return it->second;
  }
  int gen_id_imag(long loop_up, int color) const {
    auto it = imag_index_.find({loop_up, color});
    if (it == imag_index_.end()) throw std::logic_error("generator out of loop depth");
    return it->second;
  }

 private:
  void build_tables() {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (i != j) unit_index_[unit_weight(i, j)] = {i, j};
    // Generators of n_minus, ordered by delta-depth then weight.
    for (long m = 0; m <= depth_; ++m) {
      for (const auto& alpha : sys_.roots()) {
        bool positive =
            m > 0 || std::all_of(alpha.begin(), alpha.end(), [](long x) { return x >= 0; });
        if (!positive) continue;
        // beta = alpha + m*delta positive; the generator is x_{-alpha} t^{-m}.
        std::vector<long> w(alpha.size());
        for (size_t i = 0; i < alpha.size(); ++i) w[i] = -alpha[i];
        auto it = unit_index_.find(w);
        if (it == unit_index_.end()) throw std::logic_error("root without matrix unit");
        Gen g;
        g.elem = LoopElement{unit(it->second.first, it->second.second), w, -m};
        g.beta = affine_root_coords(sys_, AffineRoot::real(alpha, m));
        real_index_[{w, m}] = static_cast<int>(gens_.size());
        gens_.push_back(std::move(g));
      }
      if (m >= 1)
        for (int i = 0; i < sys_.rank(); ++i) {
          Gen g;
          g.elem = LoopElement{cartan_h(i), std::vector<long>(sys_.rank(), 0), -m};
          g.beta = affine_root_coords(sys_, AffineRoot::imag(m));
          g.color = i;
          imag_index_[{m, i}] = static_cast<int>(gens_.size());
          gens_.push_back(std::move(g));
        }
    }
  }

  const FiniteRootSystem& sys_;
  int n_;
  long depth_;
  std::vector<Gen> gens_;
  std::map<std::vector<long>, std::pair<int, int>> unit_index_;
  std::map<std::pair<std::vector<long>, long>, int> real_index_;
  std::map<std::pair<long, int>, int> imag_index_;
  std::map<std::pair<int, Monomial>, VecQ> straighten_;
};

// Deformed Verma module lattice over Q[t] with highest weight lam + t*dir.
class VermaLattice {
 public:
  VermaLattice(LoopAlgebra& alg, const Weight& lam, const Weight& dir)
      : alg_(alg), hw_(deform(lam, dir)), lam_(lam), dir_(dir) {}

  LoopAlgebra& algebra() { return alg_; }
  const Weight& highest_weight() const { return lam_; }
  const Weight& direction() const { return dir_; }
  const DeformedWeight& deformed_weight() const { return hw_; }

  // Action of an arbitrary loop element (or the center via `central`) on a
  // module vector, by commuting it through the PBW monomials.
  VecP act(const LoopElement& e, const VecP& v) {
    if (mat_is_zero(e.m)) return {};
    if (alg_.in_n_minus(e)) {
      VecP out;
      for (const auto& [g, c] : alg_.decompose(e)) {
        VecP part = alg_.apply_gen(g, v);
        for (const auto& [m, p] : part) vecp_add(out, m, p * PolyT(c));
      }
      return out;
    }
    VecP out;
    for (const auto& [mono, coeff] : v) {
      VecP part = apply_upper(e, mono);
      for (const auto& [m, p] : part) vecp_add(out, m, p * coeff);
    }
    return out;
  }

  // c acts by the level of the deformed highest weight.
  PolyT central_scalar() const { return hw_.level; }

  const std::vector<Monomial>& basis(const BoxCoords& nu) {
    auto it = bases_.find(nu);
    if (it != bases_.end()) return it->second;
    auto [slot, _] = bases_.emplace(nu, alg_.monomials_of_weight(nu));
    return slot->second;
  }

  // Gram matrix of the Shapovalov form on the weight space at depth nu.
  const LocalMatrix& gram(const BoxCoords& nu) {
    auto it = grams_.find(nu);
    if (it != grams_.end()) return it->second;
    const auto& b = basis(nu);
    LocalMatrix g(b.size(), b.size());
    for (size_t i = 0; i < b.size(); ++i) {
      // Peel x = g_1 ... g_k from the front: F(g_1 w v, y v) = F(w v, g_1^T y v).
      for (size_t j = i; j < b.size(); ++j) {
        VecP v;
        vecp_add(v, b[j], PolyT(1));
        for (int gi : b[i]) v = act(alg_.transpose(alg_.gens()[gi].elem), v);
        PolyT val;
        auto hit = v.find(Monomial{});
        if (hit != v.end()) val = hit->second;
        g.at(i, j) = val;
        g.at(j, i) = val;
      }
    }
    auto [slot, _] = grams_.emplace(nu, std::move(g));
    return slot->second;
  }

  // Coordinates of a module vector in the canonical basis of its weight space.
  std::vector<PolyT> coordinates(const BoxCoords& nu, const VecP& v) {
    const auto& b = basis(nu);
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < b.size(); ++i) index[b[i]] = i;
    std::vector<PolyT> out(b.size());
    for (const auto& [m, c] : v) {
      auto it = index.find(m);
      if (it == index.end()) throw std::logic_error("vector leaves its weight space");
      out[it->second] = c;
    }
    return out;
  }

 private:
  VecP apply_upper(const LoopElement& e, const Monomial& mono) {
    if (mono.empty()) {
      VecP out;
      if (alg_.is_cartan_zero(e)) vecp_add(out, Monomial{}, eval_cartan(e.m));
      return out;  // positive elements annihilate the highest weight vector
    }
    int g1 = mono.front();
    Monomial rest(mono.begin() + 1, mono.end());
    VecP out;
    VecP tail = apply_upper(e, rest);
    for (const auto& [m2, c] : tail)
      for (const auto& [m3, c3] : alg_.mul_gen(g1, m2)) vecp_add(out, m3, c * PolyT(c3));
    auto [br, central] = alg_.bracket(e, alg_.gens()[g1].elem);
    if (central != 0) {
      PolyT s = central_scalar() * PolyT(central);
      vecp_add(out, rest, s);
    }
    if (!mat_is_zero(br.m)) {
      if (alg_.in_n_minus(br)) {
        for (const auto& [g2, c2] : alg_.decompose(br))
          for (const auto& [m3, c3] : alg_.mul_gen(g2, rest)) vecp_add(out, m3, PolyT(c2 * c3));
      } else {
        VecP part = apply_upper(br, rest);
        for (const auto& [m3, p] : part) vecp_add(out, m3, p);
      }
    }
    return out;
  }

  // <deformed highest weight, h> for diagonal traceless h.
  PolyT eval_cartan(const Mat& h) {
    PolyT acc;
    Rat partial(0);
    for (int i = 0; i < alg_.system().rank(); ++i) {
      partial += h[i][i];
      acc += PolyT(partial) * hw_.finite[i];
    }
    return acc;
  }

  LoopAlgebra& alg_;
  DeformedWeight hw_;
  Weight lam_, dir_;
  std::map<BoxCoords, std::vector<Monomial>> bases_;
  std::map<BoxCoords, LocalMatrix> grams_;
};

// Basis of the space of singular vectors of weight lam - n*delta: vectors
// killed by the Chevalley generators e_1..e_l and e_0 = f_theta t.
inline std::vector<VecP> singular_vectors(VermaLattice& lat, long n) {
  LoopAlgebra& alg = lat.algebra();
  const FiniteRootSystem& sys = alg.system();
  if (n < 1) throw std::invalid_argument("singular_vectors: need weight lam - n*delta, n >= 1");
  BoxCoords nu = affine_root_coords(sys, AffineRoot::imag(n));
  const auto& b = lat.basis(nu);

  std::vector<LoopElement> raising;
  for (int i = 0; i < sys.rank(); ++i) {
    std::vector<long> w(sys.rank(), 0);
    w[i] = 1;
    raising.push_back({alg.unit(i, i + 1), w, 0});
  }
  std::vector<long> wtheta(sys.theta().begin(), sys.theta().end());
  for (auto& x : wtheta) x = -x;
  raising.push_back({alg.unit(alg.dim_finite() - 1, 0), wtheta, 1});

  std::vector<std::vector<RatFunc>> rows;
  for (const auto& e : raising) {
    // Target weight space: nu minus the raising weight.
    BoxCoords target = nu - affine_root_coords(sys, AffineRoot::real(e.weight, e.loop));
    if (!target.nonneg()) continue;
    const auto& tb = lat.basis(target);
    std::map<Monomial, size_t> index;
    for (size_t i = 0; i < tb.size(); ++i) index[tb[i]] = i;
    std::vector<std::vector<RatFunc>> block(tb.size(), std::vector<RatFunc>(b.size(), RatFunc(0)));
    for (size_t j = 0; j < b.size(); ++j) {
      VecP v;
      vecp_add(v, b[j], PolyT(1));
      VecP img = lat.act(e, v);
      for (const auto& [m, c] : img) {
        auto it = index.find(m);
        if (it == index.end()) throw std::logic_error("raising image leaves target space");
        block[it->second][j] = RatFunc(c);
      }
    }
    for (auto& row : block) rows.push_back(std::move(row));
  }
  std::vector<VecP> out;
  if (rows.empty()) {
    for (const auto& m : b) {
      VecP v;
      vecp_add(v, m, PolyT(1));
      out.push_back(std::move(v));
    }
    return out;
  }
  for (const auto& k : kernel_basis(rows)) {
    std::vector<PolyT> prim = primitive_poly_vector(k);
    VecP v;
    for (size_t j = 0; j < b.size(); ++j) vecp_add(v, b[j], prim[j]);
    out.push_back(std::move(v));
  }
  return out;
}

enum class DeformDir { Rho, RhoBar };

// The restricted quotient data over the local ring at (t): per weight, the
// t-saturated span of U(n_minus)-translates of all singular vectors at
// lam - n*delta (n up to the box depth), a complement, and its Gram matrix.
struct RestrictedSpace {
  std::vector<Monomial> basis;
  LocalMatrix submodule;  // t-saturated rows in basis coordinates
  size_t quotient_dim = 0;
};

class RestrictedLattice {
 public:
  RestrictedLattice(VermaLattice& lat, const Box& box) : lat_(lat), box_(box) {
    const FiniteRootSystem& sys = lat.algebra().system();
    if (!is_critical(sys, lat.highest_weight()))
      throw std::invalid_argument("restricted lattice: weight not critical");
    if (!(lat.direction() == rho_bar(sys)))
      throw std::invalid_argument(
          "restricted lattice: deformation must factor through the finite Cartan (use rho_bar)");
    build();
  }

  const RestrictedSpace& space(const BoxCoords& nu) const {
    auto it = spaces_.find(nu);
    if (it == spaces_.end()) throw std::invalid_argument("weight outside the box");
    return it->second;
  }

  // ord_t of the determinant of the form induced on the quotient at depth nu.
  OrdT gram_ord(const BoxCoords& nu) {
    const RestrictedSpace& sp = space(nu);
    return complement_gram_ord(lat_.gram(nu), sp.submodule);
  }

 private:
  void build() {
    LoopAlgebra& alg = lat_.algebra();
    const FiniteRootSystem& sys = alg.system();
    std::map<BoxCoords, std::vector<VecP>> spans;
    for (long n = 1; n <= box_.dmax; ++n) {
      BoxCoords nu0 = affine_root_coords(sys, AffineRoot::imag(n));
      if (!box_.contains(nu0)) continue;
      for (const auto& sv : singular_vectors(lat_, n)) {
        // Spanning translates: canonical monomials applied to the singular vector.
        for (const auto& nu : box_.all_coords(sys.rank())) {
          BoxCoords gap = nu - nu0;
          if (!gap.nonneg()) continue;
          for (const auto& m : alg.monomials_of_weight(gap)) {
            VecP v = sv;
            for (auto it = m.rbegin(); it != m.rend(); ++it) v = alg.apply_gen(*it, v);
            if (!v.empty()) spans[nu].push_back(std::move(v));
          }
        }
      }
    }
    for (const auto& nu : box_.all_coords(sys.rank())) {
      RestrictedSpace sp;
      sp.basis = lat_.basis(nu);
      auto it = spans.find(nu);
      LocalMatrix rows(it == spans.end() ? 0 : it->second.size(), sp.basis.size());
      if (it != spans.end())
        for (size_t i = 0; i < it->second.size(); ++i)
          rows.entries[i] = lat_.coordinates(nu, it->second[i]);
      sp.submodule = saturate_at_t(rows, sp.basis.size());
      sp.quotient_dim = sp.basis.size() - sp.submodule.rows();
      spaces_.emplace(nu, std::move(sp));
    }
  }

  VermaLattice& lat_;
  Box box_;
  std::map<BoxCoords, RestrictedSpace> spaces_;
};

// Character whose coefficient at lam - nu is the Jantzen dimension sum
// ord_t of the (restricted) Gram determinant at nu.
inline Character oracle_jantzen_sum(LoopAlgebra& alg, const Weight& lam, const Box& box,
                                    bool restricted) {
  const FiniteRootSystem& sys = alg.system();
  Character ch{lam, box, {}};
  if (restricted) {
    VermaLattice lat(alg, lam, rho_bar(sys));
    RestrictedLattice res(lat, box);
    for (const auto& nu : box.all_coords(sys.rank())) {
      OrdT o = res.gram_ord(nu);
      if (!o)
        throw std::runtime_error(
            "restricted Gram determinant vanished identically; the deformed restricted "
            "Verma module should be simple over Q(t)");
      if (*o != 0) ch.coeffs[nu] = *o;
    }
  } else {
    VermaLattice lat(alg, lam, rho(sys));
    for (const auto& nu : box.all_coords(sys.rank())) {
      OrdT o = ord_t(det_exact(lat.gram(nu)));
      if (!o) throw std::runtime_error("unrestricted Gram determinant vanished identically");
      if (*o != 0) ch.coeffs[nu] = *o;
    }
  }
  return ch;
}

}  // namespace verma
