#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ga/error.hpp"

namespace ga {

using Integer = boost::multiprecision::cpp_int;
// Always stored reduced with positive denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational checked_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "rational division by zero");
  return a / b;
}

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational abs_of(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// gcd on rationals: the unique nonnegative g with a/g, b/g coprime integers.
inline Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return abs_of(b);
  if (b.is_zero()) return abs_of(a);
  Integer n = boost::multiprecision::gcd(numerator(a) * denominator(b), numerator(b) * denominator(a));
  Integer d = denominator(a) * denominator(b);
  return Rational(n, d);
}

// True iff r is the square of a rational, returning the nonnegative root.
inline bool rational_sqrt(const Rational& r, Rational& root) {
  if (r < 0) return false;
  Integer n = numerator(r), d = denominator(r);
  Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  root = Rational(sn, sd);
  return true;
}

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

}  // namespace ga
