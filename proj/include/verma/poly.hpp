#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "verma/rational.hpp"

namespace verma {

// t-adic valuation; empty means +infinity (the zero polynomial).
using OrdT = std::optional<long>;

// Univariate polynomial in t over the rationals. Coefficients indexed by
// degree, trailing zeros stripped, so the zero polynomial has empty storage.
class PolyT {
 public:
  PolyT() = default;
  PolyT(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
  }
  PolyT(long c) : PolyT(Rat(c)) {}
  explicit PolyT(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static PolyT t(long power = 1) {
    std::vector<Rat> c(power + 1, Rat(0));
    c[power] = 1;
    return PolyT(std::move(c));
  }

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Rat& coeff(long d) const {
    static const Rat zero(0);
    if (d < 0 || d > degree()) return zero;
    return coeffs_[d];
  }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat at_zero() const { return coeff(0); }

  bool is_constant() const { return coeffs_.size() <= 1; }
  // Unit in the local ring at (t): nonzero constant term.
  bool is_local_unit() const { return !is_zero() && coeffs_[0] != 0; }

  friend PolyT operator+(const PolyT& a, const PolyT& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return PolyT(std::move(c));
  }
  friend PolyT operator-(const PolyT& a, const PolyT& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return PolyT(std::move(c));
  }
  PolyT operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& x : c) x = -x;
    return PolyT(std::move(c));
  }
  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return PolyT();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyT(std::move(c));
  }
  PolyT& operator+=(const PolyT& o) { return *this = *this + o; }
  PolyT& operator-=(const PolyT& o) { return *this = *this - o; }
  PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

  friend bool operator==(const PolyT& a, const PolyT& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

  // Polynomial division with remainder over the rationals.
  static void divmod(const PolyT& a, const PolyT& b, PolyT& q, PolyT& r) {
    if (b.is_zero()) throw std::invalid_argument("PolyT::divmod: division by zero");
    std::vector<Rat> rem = a.coeffs_;
    std::vector<Rat> quot;
    long db = b.degree();
    if (static_cast<long>(rem.size()) - 1 >= db)
      quot.assign(rem.size() - db, Rat(0));
    for (long d = static_cast<long>(rem.size()) - 1; d >= db; --d) {
      if (rem[d] == 0) continue;
      Rat f = rem[d] / b.coeffs_[db];
      quot[d - db] = f;
      for (long j = 0; j <= db; ++j) rem[d - db + j] -= f * b.coeffs_[j];
    }
    q = PolyT(std::move(quot));
    r = PolyT(std::move(rem));
  }

  // Exact division; throws if the remainder is nonzero.
  friend PolyT operator/(const PolyT& a, const PolyT& b) {
    PolyT q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::invalid_argument("PolyT: inexact division");
    return q;
  }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (long d = degree(); d >= 0; --d) {
      const Rat& c = coeffs_[d];
      if (c == 0) continue;
      if (!out.empty()) out += c > 0 ? " + " : " - ";
      else if (c < 0) out += "-";
      Rat a = abs(c);
      if (d == 0 || a != 1) out += rat_str(a);
      if (d >= 1) {
        if (a != 1) out += "*";
        out += "t";
        if (d > 1) out += "^" + std::to_string(d);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rat> coeffs_;
};

inline OrdT ord_t(const PolyT& p) {
  if (p.is_zero()) return std::nullopt;
  for (long d = 0;; ++d)
    if (p.coeff(d) != 0) return d;
}

inline OrdT ord_add(OrdT a, OrdT b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

// Monic gcd over the rationals.
inline PolyT poly_gcd(PolyT a, PolyT b) {
  while (!b.is_zero()) {
    PolyT q, r;
    PolyT::divmod(a, b, q, r);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  std::vector<Rat> c = a.coeffs();
  Rat lead = c.back();
  for (auto& x : c) x /= lead;
  return PolyT(std::move(c));
}

}  // namespace verma
