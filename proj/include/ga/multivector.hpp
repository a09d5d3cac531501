#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ga/rational.hpp"
#include "ga/rational_function.hpp"
#include "ga/signature.hpp"

namespace ga {

// Scalar-ring hooks shared by Rational and RationalFunction coefficients.
// `width` is the coordinate count carried by function coefficients (p+q);
// plain rationals ignore it.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational zero(int) { return 0; }
  static Rational one(int) { return 1; }
  static Rational from_int(long v, int) { return v; }
  static Rational div(const Rational& a, const Rational& b) { return checked_div(a, b); }
  static std::string str(const Rational& s) { return to_string(s); }
};

template <>
struct ScalarOps<RationalFunction> {
  static RationalFunction zero(int w) { return RationalFunction(w); }
  static RationalFunction one(int w) { return RationalFunction::constant(1, w); }
  static RationalFunction from_int(long v, int w) { return RationalFunction::constant(v, w); }
  static RationalFunction div(const RationalFunction& a, const RationalFunction& b) { return a / b; }
  static std::string str(const RationalFunction& s) { return s.to_string(); }
};

// Sparse multivector over Cl(p,q): map from basis blades to nonzero scalars.
template <class S>
class Multivector {
 public:
  using Ops = ScalarOps<S>;
  using TermMap = std::map<Blade, S>;

  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, S value) {
    Multivector m(sig);
    m.add_term(0, std::move(value));
    return m;
  }
  static Multivector blade(Signature sig, Blade b, S coeff) {
    Multivector m(sig);
    if (b >= sig.blade_count()) fail(ErrorCode::BadIndex, "blade outside the algebra");
    m.add_term(b, std::move(coeff));
    return m;
  }
  static Multivector blade(Signature sig, Blade b) { return blade(sig, b, Ops::one(sig.dim())); }
  static Multivector basis_vector(Signature sig, int mu) {
    if (mu < 0 || mu >= sig.dim()) fail(ErrorCode::BadIndex, "basis index out of range");
    return blade(sig, Blade(1u << mu));
  }

  const Signature& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  S scalar_part() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Ops::zero(sig_.dim()) : it->second;
  }
  S coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Ops::zero(sig_.dim()) : it->second;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int g = grade_of(terms_.begin()->first);
    for (const auto& [b, c] : terms_)
      if (grade_of(b) != g) return false;
    return true;
  }
  // Grade of a homogeneous element; zero counts as grade 0.
  int grade() const {
    if (!is_homogeneous()) fail(ErrorCode::NotHomogeneous, "mixed-grade multivector");
    return terms_.empty() ? 0 : grade_of(terms_.begin()->first);
  }
  int max_grade() const {
    int g = 0;
    for (const auto& [b, c] : terms_) g = std::max(g, grade_of(b));
    return g;
  }

  void add_term(Blade b, S coeff) { accumulate(b, coeff); }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) accumulate(b, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) accumulate(b, -c);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  Multivector operator-() const {
    Multivector r(sig_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
  }

  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    Multivector r(a.sig_);
    for (const auto& [ba, ca] : a.terms_) {
      for (const auto& [bb, cb] : b.terms_) {
        auto [blade, sign] = blade_geometric(ba, bb, a.sig_);
        S prod = ca * cb;
        if (sign < 0) prod = -prod;
        r.accumulate(blade, prod);
      }
    }
    return r;
  }
  Multivector& operator*=(const Multivector& o) { return *this = *this * o; }

  Multivector scaled(const S& s) const {
    Multivector r(sig_);
    if (s.is_zero()) return r;
    for (const auto& [b, c] : terms_) r.accumulate(b, c * s);
    return r;
  }
  Multivector scaled_int(long v) const { return scaled(Ops::from_int(v, sig_.dim())); }
  Multivector halved() const {
    S half = Ops::div(Ops::one(sig_.dim()), Ops::from_int(2, sig_.dim()));
    return scaled(half);
  }

  bool operator==(const Multivector& o) const { return sig_ == o.sig_ && terms_ == o.terms_; }

  void accumulate(Blade b, const S& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  void check_same(const Multivector& o) const {
    if (!(sig_ == o.sig_)) fail(ErrorCode::SignatureMismatch, "operands live in different algebras");
  }

  Signature sig_;
  TermMap terms_;
};

template <class S>
Multivector<S> wedge(const Multivector<S>& a, const Multivector<S>& b) {
  if (!(a.signature() == b.signature()))
    fail(ErrorCode::SignatureMismatch, "operands live in different algebras");
  Multivector<S> r(a.signature());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if (ba & bb) continue;  // repeated 1-form
      int sign = reorder_sign(ba, bb);
      S prod = ca * cb;
      if (sign < 0) prod = -prod;
      r.accumulate(Blade(ba | bb), prod);
    }
  }
  return r;
}

// Left contraction: grade-lowering part <a b>_{|b|-|a|}; blade terms survive
// only when the left index set is contained in the right one.
template <class S>
Multivector<S> lcontract(const Multivector<S>& a, const Multivector<S>& b) {
  if (!(a.signature() == b.signature()))
    fail(ErrorCode::SignatureMismatch, "operands live in different algebras");
  Multivector<S> r(a.signature());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      if (ba & ~bb) continue;
      auto [blade, sign] = blade_geometric(ba, bb, a.signature());
      S prod = ca * cb;
      if (sign < 0) prod = -prod;
      r.accumulate(blade, prod);
    }
  }
  return r;
}

template <class S>
Multivector<S> grade_projection(const Multivector<S>& a, int k) {
  if (k < 0 || k > a.signature().dim()) fail(ErrorCode::BadGrade, "grade out of range");
  Multivector<S> r(a.signature());
  for (const auto& [b, c] : a.terms())
    if (grade_of(b) == k) r.accumulate(b, c);
  return r;
}

template <class S>
Multivector<S> apply_grade_signs(const Multivector<S>& a, int (*sign)(int)) {
  Multivector<S> r(a.signature());
  for (const auto& [b, c] : a.terms()) {
    if (sign(grade_of(b)) < 0)
      r.accumulate(b, -c);
    else
      r.accumulate(b, c);
  }
  return r;
}

template <class S>
Multivector<S> reversion(const Multivector<S>& a) {
  return apply_grade_signs(a, reversion_sign);
}
template <class S>
Multivector<S> grade_involution(const Multivector<S>& a) {
  return apply_grade_signs(a, involution_sign);
}
template <class S>
Multivector<S> conjugation(const Multivector<S>& a) {
  return apply_grade_signs(a, conjugation_sign);
}

// Extended metric g(psi, phi): diagonal on basis blades with the product of
// the metric signs of the blade's indices, zero across distinct blades.
template <class S>
S extended_metric(const Multivector<S>& a, const Multivector<S>& b) {
  if (!(a.signature() == b.signature()))
    fail(ErrorCode::SignatureMismatch, "operands live in different algebras");
  S sum = ScalarOps<S>::zero(a.signature().dim());
  for (const auto& [ba, ca] : a.terms()) {
    auto it = b.terms().find(ba);
    if (it == b.terms().end()) continue;
    S t = ca * it->second;
    if (blade_metric_square(ba, a.signature()) < 0) t = -t;
    sum += t;
  }
  return sum;
}

template <class S>
bool is_unit_scalar(const Multivector<S>& a) {
  return a.is_scalar() && (a.scalar_part() - ScalarOps<S>::one(a.signature().dim())).is_zero();
}

// Inverse. Versor-style elements (a * ~a an invertible scalar) take the cheap
// route; anything else falls back to solving a x = 1 over the scalar field.
template <class S>
Multivector<S> inverse(const Multivector<S>& a) {
  using Ops = ScalarOps<S>;
  const Signature sig = a.signature();
  const int w = sig.dim();
  if (a.is_zero()) fail(ErrorCode::NotInvertible, "zero is not invertible");

  Multivector<S> rev = reversion(a);
  Multivector<S> norm = a * rev;
  if (norm.is_scalar()) {
    S s = norm.scalar_part();
    if (s.is_zero()) fail(ErrorCode::NotInvertible, "null element");
    return rev.scaled(Ops::div(Ops::one(w), s));
  }

  // Left-multiplication matrix of a over the blade basis, solved against 1.
  const std::size_t n = sig.blade_count();
  std::vector<std::vector<S>> m(n, std::vector<S>(n + 1, Ops::zero(w)));
  for (std::size_t col = 0; col < n; ++col) {
    for (const auto& [ba, ca] : a.terms()) {
      auto [blade, sign] = blade_geometric(ba, Blade(col), sig);
      S v = ca;
      if (sign < 0) v = -v;
      m[blade][col] += v;
    }
  }
  m[0][n] = Ops::one(w);

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t pivot = row;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) continue;
    std::swap(m[pivot], m[row]);
    S inv_p = Ops::div(Ops::one(w), m[row][col]);
    for (std::size_t j = col; j <= n; ++j) m[row][j] = m[row][j] * inv_p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      S f = m[i][col];
      for (std::size_t j = col; j <= n; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (!m[i][n].is_zero()) fail(ErrorCode::NotInvertible, "singular element");

  Multivector<S> x(sig);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x.accumulate(Blade(pivot_col[r]), m[r][n]);
  if (!is_unit_scalar(a * x) || !is_unit_scalar(x * a))
    fail(ErrorCode::NotInvertible, "singular element");
  return x;
}

inline Multivector<RationalFunction> lift_to_field(const Multivector<Rational>& a) {
  Multivector<RationalFunction> r(a.signature());
  for (const auto& [b, c] : a.terms())
    r.accumulate(b, RationalFunction::constant(c, a.signature().dim()));
  return r;
}

}  // namespace ga
