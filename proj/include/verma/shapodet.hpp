#pragma once

#include <stdexcept>
#include <vector>

#include "verma/charbox.hpp"
#include "verma/poly.hpp"
#include "verma/rootdata.hpp"
#include "verma/weylcalc.hpp"

namespace verma {

// One linear factor (beta, n) of the determinant product with its exponent
// mult(beta) * P(eta - n*beta).
struct DetFactor {
  AffineRoot beta;
  long n = 1;
  long exponent = 0;
};

struct DetFactorization {
  BoxCoords eta;
  std::vector<DetFactor> factors;  // zero-exponent factors omitted
};

// Product formula factors for the determinant of the contravariant form on
// the weight space at depth eta.
inline DetFactorization shapovalov_factors(PartitionEngine& pe, const BoxCoords& eta) {
  const FiniteRootSystem& sys = pe.system();
  DetFactorization out{eta, {}};
  std::set<AffineRoot> seen;
  for (const auto& item : positive_roots_under(sys, eta, true)) {
    if (!seen.insert(item.root).second) continue;  // one factor per root, colors folded into mult
    for (long n = 1;; ++n) {
      BoxCoords rem = eta - item.coords.scaled(n);
      if (!rem.nonneg()) break;
      long p = pe.kostant(rem);
      if (p > 0) out.factors.push_back({item.root, n, mult(sys, item.root) * p});
    }
  }
  return out;
}

// The factor evaluated along lam + t*dir: (lam+rho+t*dir | beta) - n(beta|beta)/2,
// a polynomial of degree at most one in t. Valid for real and imaginary beta.
inline PolyT specialize(const FiniteRootSystem& sys, const DetFactor& f, const Weight& lam,
                        const Weight& dir) {
  Weight bw = root_as_weight(sys, f.beta);
  Rat c0 = bilinear(sys, lam + rho(sys), bw) - Rat(f.n) * root_norm(sys, f.beta) / Rat(2);
  Rat c1 = bilinear(sys, dir, bw);
  return PolyT(c0) + PolyT::t() * PolyT(c1);
}

// ord_t of the full product at mu along lam + t*dir; infinity when an
// identically-zero factor carries positive exponent (the critical-imaginary
// degeneration that forces the restricted theory).
inline OrdT ord_profile(const FiniteRootSystem& sys, PartitionEngine& pe, const Weight& lam,
                        const Weight& mu, const Weight& dir) {
  auto eta = leq(sys, mu, lam);
  if (!eta) throw std::invalid_argument("ord_profile: mu is not below lam");
  long total = 0;
  for (const auto& f : shapovalov_factors(pe, *eta).factors) {
    OrdT o = ord_t(specialize(sys, f, lam, dir));
    if (!o) return std::nullopt;
    total += f.exponent * *o;
  }
  return total;
}

// The product itself as a polynomial in t (up to the global scalar the
// formula leaves undetermined).
inline PolyT specialized_product(const FiniteRootSystem& sys, PartitionEngine& pe,
                                 const BoxCoords& eta, const Weight& lam, const Weight& dir) {
  PolyT prod(1);
  for (const auto& f : shapovalov_factors(pe, eta).factors) {
    PolyT base = specialize(sys, f, lam, dir);
    for (long e = 0; e < f.exponent; ++e) prod *= base;
  }
  return prod;
}

}  // namespace verma
