#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace verma {

// Exact rational scalar. Always stored reduced with positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw std::invalid_argument("to_long: not an integer");
  return static_cast<long>(numerator(r));
}

// Accepts "p", "-p", "p/q".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rat: zero denominator");
  return Rat(num) / Rat(den);  // normalizes a negative denominator
}

inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace verma
