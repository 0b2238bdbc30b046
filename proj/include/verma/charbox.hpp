#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "verma/boxcoords.hpp"
#include "verma/rootdata.hpp"
#include "verma/weylcalc.hpp"

namespace verma {

// Positive affine roots (with imaginary colors) fitting under a coordinate cap.
struct PosRootItem {
  AffineRoot root;
  int color = 0;  // distinguishes the rank many copies of an imaginary root
  BoxCoords coords;
};

inline BoxCoords affine_root_coords(const FiniteRootSystem& sys, const AffineRoot& beta) {
  BoxCoords bc{beta.n, std::vector<long>(sys.rank(), 0)};
  for (int i = 0; i < sys.rank(); ++i) {
    bc.cfin[i] = beta.n * sys.theta()[i];
    if (!beta.imaginary) bc.cfin[i] += beta.finite[i];
  }
  return bc;
}

inline std::vector<PosRootItem> positive_roots_under(const FiniteRootSystem& sys,
                                                     const BoxCoords& cap,
                                                     bool include_imaginary) {
  std::vector<PosRootItem> items;
  auto fits = [&](const BoxCoords& b) {
    if (!b.nonneg() || b.c0 > cap.c0) return false;
    for (size_t i = 0; i < b.cfin.size(); ++i)
      if (b.cfin[i] > cap.cfin[i]) return false;
    return true;
  };
  for (long m = 0; m <= cap.c0; ++m) {
    for (const auto& alpha : sys.roots()) {
      bool positive =
          m > 0 || std::all_of(alpha.begin(), alpha.end(), [](long x) { return x >= 0; });
      if (!positive) continue;
      AffineRoot beta = AffineRoot::real(alpha, m);
      BoxCoords bc = affine_root_coords(sys, beta);
      if (fits(bc)) items.push_back({beta, 0, bc});
    }
    if (include_imaginary && m >= 1) {
      AffineRoot beta = AffineRoot::imag(m);
      BoxCoords bc = affine_root_coords(sys, beta);
      if (fits(bc))
        for (int color = 0; color < sys.rank(); ++color) items.push_back({beta, color, bc});
    }
  }
  return items;
}

// Kostant partition function and its real-roots-only restriction,
// memoized per root system.
class PartitionEngine {
 public:
  explicit PartitionEngine(const FiniteRootSystem& sys) : sys_(sys) {}

  const FiniteRootSystem& system() const { return sys_; }

  // Number of multisets of positive affine roots summing to nu, imaginary
  // roots carrying rank many colors.
  long kostant(const BoxCoords& nu) { return count(nu, true, full_cache_); }

  // Same over real positive roots only.
  long restricted(const BoxCoords& nu) { return count(nu, false, real_cache_); }

 private:
  long count(const BoxCoords& nu, bool imaginary, std::map<BoxCoords, long>& cache) {
    if (!nu.nonneg()) return 0;
    auto hit = cache.find(nu);
    if (hit != cache.end()) return hit->second;
    auto items = positive_roots_under(sys_, nu, imaginary);
    std::map<std::pair<size_t, BoxCoords>, long> memo;
    auto rec = [&](auto&& self, size_t idx, const BoxCoords& rem) -> long {
      if (rem.is_zero()) return 1;
      if (idx == items.size()) return 0;
      auto key = std::make_pair(idx, rem);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      long total = 0;
      BoxCoords left = rem;
      for (;;) {
        total += self(self, idx + 1, left);
        left = left - items[idx].coords;
        if (!left.nonneg()) break;
      }
      memo[key] = total;
      return total;
    };
    long value = rec(rec, 0, nu);
    cache[nu] = value;
    return value;
  }

  const FiniteRootSystem& sys_;
  std::map<BoxCoords, long> full_cache_, real_cache_;
};

// Truncated formal character: integer coefficients on a box below a base weight.
struct Character {
  Weight base;
  Box box;
  std::map<BoxCoords, long> coeffs;  // zero entries may be omitted

  long at(const BoxCoords& nu) const {
    auto it = coeffs.find(nu);
    return it == coeffs.end() ? 0 : it->second;
  }

  bool is_zero() const {
    for (const auto& [nu, c] : coeffs)
      if (c != 0) return false;
    return true;
  }
};

// Coefficient at an absolute weight; nullopt signals "outside the box",
// which is distinct from an in-box zero.
inline std::optional<long> coefficient_at(const FiniteRootSystem& sys, const Character& ch,
                                          const Weight& mu) {
  auto bc = leq(sys, mu, ch.base);
  if (!bc || !ch.box.contains(*bc)) return std::nullopt;
  return ch.at(*bc);
}

inline Box box_intersection(const Box& a, const Box& b) {
  return Box{std::min(a.dmax, b.dmax), std::min(a.hmax, b.hmax)};
}

inline Character char_add(const Character& a, const Character& b) {
  if (!(a.base == b.base)) throw std::invalid_argument("char_add: different base weights");
  Character r{a.base, box_intersection(a.box, b.box), {}};
  for (const auto& [nu, c] : a.coeffs)
    if (r.box.contains(nu)) r.coeffs[nu] += c;
  for (const auto& [nu, c] : b.coeffs)
    if (r.box.contains(nu)) r.coeffs[nu] += c;
  return r;
}

inline Character char_sub(const Character& a, const Character& b) {
  if (!(a.base == b.base)) throw std::invalid_argument("char_sub: different base weights");
  Character r{a.base, box_intersection(a.box, b.box), {}};
  for (const auto& [nu, c] : a.coeffs)
    if (r.box.contains(nu)) r.coeffs[nu] += c;
  for (const auto& [nu, c] : b.coeffs)
    if (r.box.contains(nu)) r.coeffs[nu] -= c;
  return r;
}

// Re-bases the character at base - drop; box-coordinate indices are kept, so
// coefficient_at(mu - drop) of the shift equals coefficient_at(mu) before.
inline Character char_shift(const Character& ch, const Weight& drop) {
  Character r = ch;
  r.base = ch.base - drop;
  return r;
}

inline Character ch_verma(PartitionEngine& pe, const Weight& lam, const Box& box) {
  Character ch{lam, box, {}};
  for (const auto& nu : box.all_coords(pe.system().rank())) {
    long v = pe.kostant(nu);
    if (v != 0) ch.coeffs[nu] = v;
  }
  return ch;
}

inline Character ch_restricted_verma(PartitionEngine& pe, const Weight& lam, const Box& box) {
  if (!is_critical(pe.system(), lam))
    throw std::invalid_argument("ch_restricted_verma: weight not critical");
  Character ch{lam, box, {}};
  for (const auto& nu : box.all_coords(pe.system().rank())) {
    long v = pe.restricted(nu);
    if (v != 0) ch.coeffs[nu] = v;
  }
  return ch;
}

// Alternating restricted-Verma series along the down-chain of alpha starting
// at step `first_step`, truncated to the box below lam. Terms vanish once the
// chain drops out of the box; strict descent guarantees termination.
inline Character down_chain_alternating(PartitionEngine& pe, const Weight& lam,
                                        const RootCoords& alpha, const Box& box,
                                        long first_step) {
  const FiniteRootSystem& sys = pe.system();
  Character ch{lam, box, {}};
  Weight w = down_pow(sys, alpha, lam, first_step);
  long sign = 1;
  for (;;) {
    auto gap = leq(sys, w, lam);
    if (!gap) throw std::logic_error("down-chain left the cone below lam");
    if (!box.contains(*gap)) break;  // gaps grow monotonically along the chain
    for (const auto& nu : box.all_coords(sys.rank())) {
      BoxCoords rel = nu - *gap;
      if (!rel.nonneg()) continue;
      long v = pe.restricted(rel);
      if (v != 0) ch.coeffs[nu] += sign * v;
    }
    w = down(sys, alpha, w);
    sign = -sign;
  }
  return ch;
}

// Character of the simple module for generic or subgeneric critical weights.
inline Character ch_simple_subgeneric(PartitionEngine& pe, const Weight& lam, const Box& box) {
  const FiniteRootSystem& sys = pe.system();
  if (!is_critical(sys, lam))
    throw std::invalid_argument("ch_simple_subgeneric: weight not critical");
  IntegralData data = integral_roots(sys, lam);
  if (data.cls == WeightClass::General)
    throw std::invalid_argument("ch_simple_subgeneric: no formula for general weights");
  if (data.cls == WeightClass::Generic) return ch_restricted_verma(pe, lam, box);
  return down_chain_alternating(pe, lam, data.subgeneric_root, box, 0);
}

}  // namespace verma
