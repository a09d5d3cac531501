#pragma once

#include <string>
#include <vector>

#include "ga/polynomial.hpp"

namespace ga {

// Quotient of multivariate polynomials, kept in canonical form: numerator and
// denominator coprime, denominator with coprime integer coefficients and a
// positive leading coefficient under graded lex. Equality is a term-map
// comparison of both parts.
class RationalFunction {
 public:
  explicit RationalFunction(int vars = 4);
  RationalFunction(const Polynomial& num);  // NOLINT: implicit lift is intended
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction constant(const Rational& c, int vars);
  static RationalFunction variable(int i, int vars);

  int vars() const { return num_.vars(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

  RationalFunction derivative(int mu) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  std::string to_string() const;

 private:
  void normalize();

  Polynomial num_, den_;
};

}  // namespace ga
