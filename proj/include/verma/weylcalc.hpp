#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "verma/boxcoords.hpp"
#include "verma/rootdata.hpp"

namespace verma {

// w . lam = w(lam+rho) - rho for the reflection at a real root.
inline Weight dot_reflect(const FiniteRootSystem& sys, const AffineRoot& beta, const Weight& lam) {
  if (beta.imaginary) throw std::invalid_argument("dot_reflect: imaginary root");
  Rat p = coroot_pairing(sys, lam + rho(sys), beta);
  Weight bw = root_as_weight(sys, beta);
  Weight r = lam;
  for (size_t i = 0; i < r.finite.size(); ++i) r.finite[i] -= p * bw.finite[i];
  r.level -= p * bw.level;
  r.ddeg -= p * bw.ddeg;
  return r;
}

// mu <= lam in the usual ordering; the unique decomposition of lam - mu
// over Pi_hat when it exists.
inline std::optional<BoxCoords> leq(const FiniteRootSystem& sys, const Weight& mu,
                                    const Weight& lam) {
  if (mu.level != lam.level) return std::nullopt;
  Weight diff = lam - mu;
  if (!is_integer(diff.ddeg)) return std::nullopt;
  long c0 = to_long(diff.ddeg);
  if (c0 < 0) return std::nullopt;
  std::vector<Rat> fr = sys.weight_to_root_coords(diff.finite);
  BoxCoords bc{c0, std::vector<long>(sys.rank(), 0)};
  for (int i = 0; i < sys.rank(); ++i) {
    Rat c = fr[i] + Rat(c0) * Rat(sys.theta()[i]);
    if (!is_integer(c)) return std::nullopt;
    long v = to_long(c);
    if (v < 0) return std::nullopt;
    bc.cfin[i] = v;
  }
  return bc;
}

inline Rat level_of(const Weight& lam) { return lam.level; }

// Inverse of leq: the weight lam - nu for box coordinates nu.
inline Weight weight_below(const FiniteRootSystem& sys, const Weight& lam, const BoxCoords& nu) {
  RootCoords f(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) f[i] = nu.cfin[i] - nu.c0 * sys.theta()[i];
  Weight drop{sys.root_to_weight_coords(f), Rat(0), Rat(nu.c0)};
  return lam - drop;
}

inline bool is_critical(const FiniteRootSystem& sys, const Weight& lam) {
  return lam.level == -sys.hdual();
}

inline Weight critical_weight(const FiniteRootSystem& sys, std::vector<Rat> finite,
                              Rat ddeg = Rat(0)) {
  return Weight{std::move(finite), -sys.hdual(), std::move(ddeg)};
}

enum class WeightClass { Generic, Subgeneric, General };

struct IntegralData {
  std::vector<RootCoords> positive;  // R(lam)^+; R(lam) is the union with negatives
  WeightClass cls = WeightClass::Generic;
  RootCoords subgeneric_root;  // set when cls == Subgeneric
};

// Finite integral roots R(lam) = {alpha in R : <lam+rho, alpha^vee> in Z}
// and the generic/subgeneric classification by nonzero pairings.
inline IntegralData integral_roots(const FiniteRootSystem& sys, const Weight& lam) {
  IntegralData out;
  Weight shifted = lam + rho(sys);
  std::vector<RootCoords> nonzero;
  for (const auto& alpha : sys.positive_roots()) {
    Rat p = coroot_pairing(sys, shifted, AffineRoot::real(alpha, 0));
    if (!is_integer(p)) continue;
    out.positive.push_back(alpha);
    if (p != 0) nonzero.push_back(alpha);
  }
  if (nonzero.empty()) {
    out.cls = WeightClass::Generic;
  } else if (nonzero.size() == 1 && out.positive.size() == 1) {
    out.cls = WeightClass::Subgeneric;
    out.subgeneric_root = nonzero[0];
  } else {
    out.cls = WeightClass::General;
  }
  return out;
}

// alpha-down: the element of {s_alpha . lam, s_{-alpha+delta} . lam} below lam.
// Closed form by the sign of n = <lam+rho, alpha^vee>, re-derived from the
// defining property at each call.
inline Weight down(const FiniteRootSystem& sys, const RootCoords& alpha, const Weight& lam) {
  if (!is_critical(sys, lam)) throw std::invalid_argument("down: weight not critical");
  Rat p = coroot_pairing(sys, lam + rho(sys), AffineRoot::real(alpha, 0));
  if (!is_integer(p)) throw std::invalid_argument("down: root not integral for this weight");
  long n = to_long(p);
  Weight alpha_w = root_as_weight(sys, AffineRoot::real(alpha, 0));
  Weight result = lam;
  for (size_t i = 0; i < result.finite.size(); ++i) result.finite[i] -= Rat(n) * alpha_w.finite[i];
  if (n < 0) result.ddeg += Rat(n);
  // Defining property: result is the member of the reflection pair below lam.
  if (n != 0) {
    Weight s1 = dot_reflect(sys, AffineRoot::real(alpha, 0), lam);
    RootCoords neg = alpha;
    for (auto& x : neg) x = -x;
    Weight s2 = dot_reflect(sys, AffineRoot::real(neg, 1), lam);
    bool ok = (result == s1 || result == s2) && leq(sys, result, lam).has_value();
    if (!ok) throw std::logic_error("down: closed form disagrees with defining property");
  }
  return result;
}

inline Weight down_pow(const FiniteRootSystem& sys, const RootCoords& alpha, Weight lam, long k) {
  for (long i = 0; i < k; ++i) lam = down(sys, alpha, lam);
  return lam;
}

// Weights reachable from lam by the Kac-Kazhdan generation rule
// nu = mu - n*beta with 2(mu+rho|beta) = n(beta|beta), truncated to the box.
inline std::set<BoxCoords> kk_lower_set(const FiniteRootSystem& sys, const Weight& lam,
                                        const Box& box) {
  Weight rho_w = rho(sys);
  std::set<BoxCoords> seen;
  std::vector<Weight> work{lam};
  seen.insert(BoxCoords::zero(sys.rank()));
  auto push = [&](const Weight& nu) {
    auto bc = leq(sys, nu, lam);
    if (!bc || !box.contains(*bc)) return;
    if (seen.insert(*bc).second) work.push_back(nu);
  };
  while (!work.empty()) {
    Weight mu = work.back();
    work.pop_back();
    Weight shifted = mu + rho_w;
    // Real roots alpha + m*delta within delta-reach of the box.
    for (long m = 0; m <= box.dmax; ++m)
      for (const auto& alpha : sys.roots()) {
        bool positive = m > 0 || std::all_of(alpha.begin(), alpha.end(),
                                             [](long x) { return x >= 0; });
        if (!positive) continue;
        AffineRoot beta = AffineRoot::real(alpha, m);
        Rat p = coroot_pairing(sys, shifted, beta);
        if (!is_integer(p)) continue;
        long n = to_long(p);
        if (n <= 0) continue;
        Weight bw = root_as_weight(sys, beta);
        Weight nu = mu;
        for (size_t i = 0; i < nu.finite.size(); ++i) nu.finite[i] -= Rat(n) * bw.finite[i];
        nu.ddeg -= Rat(n) * bw.ddeg;
        push(nu);
      }
    // Imaginary roots: 2(mu+rho|m*delta) = 0 = n(beta|beta) iff critical.
    if (bilinear(sys, shifted, weight_delta(sys)) == 0)
      for (long m = 1; m <= box.dmax; ++m)
        for (long n = 1; n * m <= box.dmax; ++n) {
          Weight nu = mu;
          nu.ddeg -= Rat(n * m);
          push(nu);
        }
  }
  return seen;
}

// Orbit of lam under the integral affine Weyl group dot-action, truncated to
// weights mu <= lam with lam - mu in the box.
inline std::set<BoxCoords> linkage_orbit(const FiniteRootSystem& sys, const Weight& lam,
                                         const Box& box) {
  if (!is_critical(sys, lam)) throw std::invalid_argument("linkage_orbit: weight not critical");
  IntegralData data = integral_roots(sys, lam);
  std::set<BoxCoords> seen;
  std::vector<Weight> work{lam};
  seen.insert(BoxCoords::zero(sys.rank()));
  while (!work.empty()) {
    Weight mu = work.back();
    work.pop_back();
    for (const auto& alpha : data.positive)
      for (long n = -(box.dmax + 1); n <= box.dmax + 1; ++n) {
        Weight img = dot_reflect(sys, AffineRoot::real(alpha, n), mu);
        auto bc = leq(sys, img, lam);
        if (!bc || !box.contains(*bc)) continue;
        if (seen.insert(*bc).second) work.push_back(img);
      }
  }
  return seen;
}

}  // namespace verma
