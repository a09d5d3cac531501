#include "ga/rational_function.hpp"

namespace ga {

RationalFunction::RationalFunction(int vars)
    : num_(vars), den_(Polynomial::constant(1, vars)) {}

RationalFunction::RationalFunction(const Polynomial& num)
    : num_(num), den_(Polynomial::constant(1, num.vars())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(const Rational& c, int vars) {
  return RationalFunction(Polynomial::constant(c, vars));
}

RationalFunction RationalFunction::variable(int i, int vars) {
  return RationalFunction(Polynomial::variable(i, vars));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1, num_.vars());
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_value();
    if (c != 1) {
      num_ = num_.scaled(Rational(1) / c);
      den_ = Polynomial::constant(1, num_.vars());
    }
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  Rational scale = den_.rational_content();
  if (den_.leading().second < 0) scale = -scale;
  if (scale != 1) {
    Rational inv = Rational(1) / scale;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(vars());
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  Polynomial g = poly_gcd(a.den_, b.den_);
  Polynomial bd = divide_exact(b.den_, g);
  Polynomial ad = divide_exact(a.den_, g);
  return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.vars());
  bool da1 = a.den_.is_constant(), db1 = b.den_.is_constant();
  if (da1 && db1) {
    RationalFunction r(a.vars());
    r.num_ = a.num_ * b.num_;
    Rational scale = a.den_.constant_value() * b.den_.constant_value();
    if (scale != 1) r.num_ = r.num_.scaled(Rational(1) / scale);
    return r;
  }
  Polynomial g1 = da1 ? Polynomial::constant(1, a.vars()) : poly_gcd(b.num_, a.den_);
  Polynomial g2 = db1 ? Polynomial::constant(1, a.vars()) : poly_gcd(a.num_, b.den_);
  return RationalFunction(divide_exact(a.num_, g2) * divide_exact(b.num_, g1),
                          divide_exact(a.den_, g1) * divide_exact(b.den_, g2));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "rational function division by zero");
  RationalFunction inv(b.den_, b.num_);
  return a * inv;
}

RationalFunction RationalFunction::derivative(int mu) const {
  // Quotient rule; normalization strips the common power of the denominator.
  Polynomial dn = num_.derivative(mu), dd = den_.derivative(mu);
  if (dd.is_zero()) return RationalFunction(dn, den_);
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
  Rational dv = den_.evaluate(point);
  if (dv.is_zero()) fail(ErrorCode::EvaluationPole, "denominator vanishes at the point");
  return num_.evaluate(point) / dv;
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial::constant(1, vars())) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace ga
