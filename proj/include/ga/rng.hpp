#pragma once

#include <cstdint>
#include <random>

#include "ga/grading.hpp"

namespace ga {

// Deterministic generator for suite inputs. Draws go through next()/range()
// only, so identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + long(next() % std::uint64_t(hi - lo + 1));
  }

  bool coin() { return next() % 2 == 0; }

  // Numerators uniform in [-9,9] excluding 0, denominators in [1,9].
  Rational rational() {
    long num = range(1, 9) * (coin() ? 1 : -1);
    long den = range(1, 9);
    return Rational(num, den);
  }

  Rational rational_or_zero() { return coin() ? Rational(0) : rational(); }

  Multivector<Rational> multivector(Signature sig) {
    Multivector<Rational> m(sig);
    for (Blade b = 0; b < sig.blade_count(); ++b)
      if (coin()) m.add_term(b, rational());
    return m;
  }

  Multivector<Rational> homogeneous(Signature sig, int grade) {
    Multivector<Rational> m(sig);
    for (Blade b = 0; b < sig.blade_count(); ++b)
      if (grade_of(b) == grade && coin()) m.add_term(b, rational());
    if (m.is_zero()) {
      for (Blade b = 0; b < sig.blade_count(); ++b)
        if (grade_of(b) == grade) {
          m.add_term(b, rational());
          break;
        }
    }
    return m;
  }

  // Rational point on the unit circle (c, s), c^2 + s^2 = 1.
  std::pair<Rational, Rational> circle_point() {
    Rational t = rational();
    Rational d = 1 + t * t;
    return {(1 - t * t) / d, 2 * t / d};
  }

  // Rational point on the unit hyperbola (c, s), c^2 - s^2 = 1.
  std::pair<Rational, Rational> hyperbola_point() {
    Rational t = rational();
    return {(t * t + 1) / (2 * t), (t * t - 1) / (2 * t)};
  }

  // Elementary even versor a + b e^{mu nu} with L ~L = 1.
  Multivector<Rational> elementary_versor(Signature sig) {
    int mu = int(range(0, sig.dim() - 1));
    int nu = int(range(0, sig.dim() - 2));
    if (nu >= mu) ++nu;
    Blade plane = Blade((1u << mu) | (1u << nu));
    bool boost_like = sig.metric_sign(mu) * sig.metric_sign(nu) < 0;
    auto [a, b] = boost_like ? hyperbola_point() : circle_point();
    Multivector<Rational> l = Multivector<Rational>::scalar(sig, a);
    l.add_term(plane, b);
    return l;
  }

  Versor<Rational> versor(Signature sig, int factors = 2) {
    Multivector<Rational> l = Multivector<Rational>::scalar(sig, 1);
    for (int i = 0; i < factors; ++i) l = l * elementary_versor(sig);
    return Versor<Rational>(l);
  }

  // Exact unit 1-form: a random versor sandwich of a basis direction, square
  // +1 when the signature has a timelike direction, otherwise -1.
  Multivector<Rational> unit_vector(Signature sig) {
    int base = sig.p > 0 ? int(range(0, sig.p - 1)) : int(range(sig.p, sig.dim() - 1));
    Multivector<Rational> v = Multivector<Rational>::basis_vector(sig, base);
    return versor(sig).sandwich(v);
  }

  Polynomial polynomial(int vars, int max_deg, int max_terms) {
    Polynomial p(vars);
    long terms = range(1, max_terms);
    for (long t = 0; t < terms; ++t) {
      Monomial m;
      long deg = range(0, max_deg);
      for (long k = 0; k < deg; ++k) m.e[std::size_t(range(0, vars - 1))]++;
      p.add_term(m, rational());
    }
    return p;
  }

  // Multivector field with polynomial coefficients.
  Multivector<RationalFunction> field(Signature sig, int max_deg, int max_terms) {
    Multivector<RationalFunction> m(sig);
    for (Blade b = 0; b < sig.blade_count(); ++b)
      if (coin()) m.add_term(b, RationalFunction(polynomial(sig.dim(), max_deg, max_terms)));
    return m;
  }

  Multivector<RationalFunction> homogeneous_field(Signature sig, int grade, int max_deg,
                                                  int max_terms) {
    Multivector<RationalFunction> m(sig);
    for (Blade b = 0; b < sig.blade_count(); ++b)
      if (grade_of(b) == grade && coin())
        m.add_term(b, RationalFunction(polynomial(sig.dim(), max_deg, max_terms)));
    if (m.is_zero()) {
      for (Blade b = 0; b < sig.blade_count(); ++b)
        if (grade_of(b) == grade) {
          m.add_term(b, RationalFunction(polynomial(sig.dim(), max_deg, max_terms)));
          break;
        }
    }
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ga
