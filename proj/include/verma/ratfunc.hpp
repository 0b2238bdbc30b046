#pragma once

#include <stdexcept>

#include "verma/poly.hpp"

namespace verma {

// Element of the fraction field Q(t), kept gcd-reduced with monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(PolyT p) : num_(std::move(p)), den_(1) {}
  RatFunc(const Rat& c) : num_(c), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(PolyT num, PolyT den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    reduce();
  }

  const PolyT& num() const { return num_; }
  const PolyT& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Valuation at t; may be negative. Infinity for zero.
  OrdT ord() const {
    if (is_zero()) return std::nullopt;
    return *ord_t(num_) - *ord_t(den_);
  }
  // Membership in the local ring at (t): reduced denominator is a unit.
  bool in_local_ring() const { return den_.is_local_unit(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const {
    if (den_ == PolyT(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = PolyT(1);
      return;
    }
    PolyT g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    Rat lead = den_.coeff(den_.degree());
    if (lead != 1) {
      std::vector<Rat> n = num_.coeffs(), d = den_.coeffs();
      for (auto& x : n) x /= lead;
      for (auto& x : d) x /= lead;
      num_ = PolyT(std::move(n));
      den_ = PolyT(std::move(d));
    }
  }
  PolyT num_, den_;
};

}  // namespace verma
