#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ga/rational.hpp"

namespace ga {

inline constexpr int kMaxVars = 8;

// Exponent vector for coordinates x0..x{d-1}.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto v : e) d += v;
    return d;
  }
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order, x0 most significant.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

// Sparse multivariate polynomial over the rationals. No zero coefficients
// are stored; the zero polynomial is the empty term map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit Polynomial(int vars = 4);

  static Polynomial constant(const Rational& c, int vars);
  static Polynomial variable(int i, int vars);
  static Polynomial term(const Monomial& m, const Rational& c, int vars);

  int vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  int main_var() const;  // highest var with positive degree, -1 if none

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned k) const;

  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  Polynomial derivative(int mu) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  // Leading term under graded lex; requires nonzero.
  const std::pair<const Monomial, Rational>& leading() const;

  // Positive rational c such that (*this)/c has coprime integer coefficients.
  Rational rational_content() const;
  // Divided by rational content and sign-fixed so the leading coefficient is positive.
  Polynomial primitive() const;

  std::string to_string() const;

 private:
  int vars_;
  TermMap terms_;
};

// Primitive gcd (content/primitive-part recursion with a primitive pseudo-
// remainder sequence); result has positive leading coefficient, gcd(p,0)=p
// normalized, and any two nonzero constants have gcd 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Exact quotient; throws if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

}  // namespace ga
