#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace cdp {

// Exact arithmetic only: arbitrary-precision integers and reduced rationals.
// cpp_rational keeps gcd(|num|, den) = 1 and den >= 1 as a class invariant.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// floor/ceil toward -inf/+inf (cpp_int division truncates toward zero)
inline Int floor_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (r > 0 && q * denominator(r) != numerator(r)) ++q;
  return q;
}

inline std::string to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int n(s.substr(0, slash)), d(s.substr(slash + 1));
  if (d <= 0) throw std::invalid_argument("rational with non-positive denominator: " + s);
  return Rat(n, d);
}

}  // namespace cdp
