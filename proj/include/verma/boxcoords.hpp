#pragma once

#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace verma {

// Coordinates of a difference lam - mu over the affine simple roots
// Pi_hat = Pi + {-theta+delta}: c0 counts -theta+delta, cfin the finite
// simple roots.
struct BoxCoords {
  long c0 = 0;
  std::vector<long> cfin;

  static BoxCoords zero(int rank) { return {0, std::vector<long>(rank, 0)}; }

  long height() const { return std::accumulate(cfin.begin(), cfin.end(), 0L); }
  bool nonneg() const {
    if (c0 < 0) return false;
    for (long x : cfin)
      if (x < 0) return false;
    return true;
  }
  bool is_zero() const { return c0 == 0 && height() == 0 && nonneg(); }

  friend BoxCoords operator+(const BoxCoords& a, const BoxCoords& b) {
    BoxCoords r = a;
    r.c0 += b.c0;
    for (size_t i = 0; i < r.cfin.size(); ++i) r.cfin[i] += b.cfin[i];
    return r;
  }
  friend BoxCoords operator-(const BoxCoords& a, const BoxCoords& b) {
    BoxCoords r = a;
    r.c0 -= b.c0;
    for (size_t i = 0; i < r.cfin.size(); ++i) r.cfin[i] -= b.cfin[i];
    return r;
  }
  BoxCoords scaled(long k) const {
    BoxCoords r = *this;
    r.c0 *= k;
    for (auto& x : r.cfin) x *= k;
    return r;
  }
  friend bool operator==(const BoxCoords& a, const BoxCoords& b) {
    return a.c0 == b.c0 && a.cfin == b.cfin;
  }
  friend bool operator<(const BoxCoords& a, const BoxCoords& b) {
    return std::tie(a.c0, a.cfin) < std::tie(b.c0, b.cfin);
  }
};

// Finite truncation window below a base weight.
struct Box {
  long dmax = 0;  // max c0
  long hmax = 0;  // max sum of finite coefficients

  bool contains(const BoxCoords& v) const {
    return v.nonneg() && v.c0 <= dmax && v.height() <= hmax;
  }

  // Every coordinate vector in the box, lexicographically ordered.
  std::vector<BoxCoords> all_coords(int rank) const {
    std::vector<BoxCoords> out;
    std::vector<long> cur(rank, 0);
    auto rec = [&](auto&& self, int idx, long remaining) -> void {
      if (idx == rank) {
        for (long c0 = 0; c0 <= dmax; ++c0) out.push_back({c0, cur});
        return;
      }
      for (long v = 0; v <= remaining; ++v) {
        cur[idx] = v;
        self(self, idx + 1, remaining - v);
      }
      cur[idx] = 0;
    };
    rec(rec, 0, hmax);
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace verma
