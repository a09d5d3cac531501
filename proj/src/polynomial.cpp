#include "ga/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ga {

Polynomial::Polynomial(int vars) : vars_(vars) {
  if (vars < 0 || vars > kMaxVars) fail(ErrorCode::BadIndex, "variable count out of range");
}

Polynomial Polynomial::constant(const Rational& c, int vars) {
  Polynomial p(vars);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int i, int vars) {
  Polynomial p(vars);
  if (i < 0 || i >= vars) fail(ErrorCode::BadIndex, "variable index out of range");
  Monomial m;
  m.e[i] = 1;
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c, int vars) {
  Polynomial p(vars);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  auto it = terms_.find(Monomial{});
  if (terms_.size() != 1 || it == terms_.end()) fail(ErrorCode::BadIndex, "not a constant polynomial");
  return it->second;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.e[var]));
  return d;
}

int Polynomial::main_var() const {
  int mv = -1;
  for (const auto& [m, c] : terms_)
    for (int i = vars_ - 1; i > mv; --i)
      if (m.e[i] > 0) mv = i;
  return mv;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::uint8_t(ma.e[i] + mb.e[i]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = Polynomial::constant(1, vars_);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

Polynomial Polynomial::derivative(int mu) const {
  if (mu < 0 || mu >= vars_) fail(ErrorCode::BadIndex, "derivative index out of range");
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.e[mu] == 0) continue;
    Monomial d = m;
    d.e[mu] -= 1;
    r.add_term(d, c * int(m.e[mu]));
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (int(point.size()) < vars_) fail(ErrorCode::BadIndex, "evaluation point has too few coordinates");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < vars_; ++i)
      for (int k = 0; k < m.e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

const std::pair<const Monomial, Rational>& Polynomial::leading() const {
  if (terms_.empty()) fail(ErrorCode::BadIndex, "zero polynomial has no leading term");
  return *terms_.rbegin();
}

Rational Polynomial::rational_content() const {
  Rational g = 0;
  for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
  return g;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = rational_content();
  if (leading().second < 0) c = -c;
  Polynomial r(vars_);
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v / c);
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded lex, leading term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& [m, c] = *it;
    bool has_vars = m.degree() > 0;
    if (!has_vars) {
      os << ga::to_string(c);
      continue;
    }
    bool printed = false;
    if (c != 1) {
      os << ga::to_string(c);
      printed = true;
    }
    for (int i = 0; i < vars_; ++i) {
      if (m.e[i] == 0) continue;
      if (printed) os << "*";
      os << "x" << i;
      if (m.e[i] > 1) os << "^" << int(m.e[i]);
      printed = true;
    }
  }
  return os.str();
}

namespace {

// View as univariate in `var`: dense coefficient list, entries share vars().
std::vector<Polynomial> coefficients_in(const Polynomial& p, int var) {
  std::vector<Polynomial> cs(std::size_t(p.degree_in(var)) + 1, Polynomial(p.vars()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int k = rest.e[var];
    rest.e[var] = 0;
    cs[std::size_t(k)].add_term(rest, c);
  }
  return cs;
}

Polynomial assemble_in(const std::vector<Polynomial>& cs, int var, int vars) {
  Polynomial r(vars);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (const auto& [m, c] : cs[k].terms()) {
      Monomial full = m;
      full.e[var] = std::uint8_t(full.e[var] + k);
      r.add_term(full, c);
    }
  }
  return r;
}

Polynomial shift_in(const Polynomial& p, int var, int k) {
  Polynomial r(p.vars());
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    s.e[var] = std::uint8_t(s.e[var] + k);
    r.add_term(s, c);
  }
  return r;
}

// Pseudo-remainder of a by b with respect to `var` (deg_var(b) >= 1).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int var) {
  int db = b.degree_in(var);
  auto bc = coefficients_in(b, var);
  const Polynomial& lb = bc[std::size_t(db)];
  while (!a.is_zero() && a.degree_in(var) >= db) {
    int da = a.degree_in(var);
    auto ac = coefficients_in(a, var);
    const Polynomial& la = ac[std::size_t(da)];
    a = a * lb - shift_in(b, var, da - db) * la;
  }
  return a;
}

// Content of p with respect to `var`: gcd of its univariate coefficients.
Polynomial content_in(const Polynomial& p, int var) {
  Polynomial g(p.vars());
  for (const auto& c : coefficients_in(p, var)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
  }
  return g;
}

}  // namespace

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  Polynomial r = a;
  Polynomial q(a.vars());
  const auto& [mb, cb] = b.leading();
  while (!r.is_zero()) {
    const auto& [mr, cr] = r.leading();
    Monomial t;
    for (int i = 0; i < kMaxVars; ++i) {
      if (mr.e[i] < mb.e[i]) fail(ErrorCode::DivisionByZero, "inexact polynomial division");
      t.e[i] = std::uint8_t(mr.e[i] - mb.e[i]);
    }
    Polynomial step = Polynomial::term(t, cr / cb, a.vars());
    q += step;
    r -= step * b;
  }
  return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Polynomial::constant(1, a.vars());
  if (a == b) return a.primitive();

  int var = std::max(a.main_var(), b.main_var());
  Polynomial ca = content_in(a, var), cb = content_in(b, var);
  Polynomial pa = divide_exact(a, ca).primitive();
  Polynomial pb = divide_exact(b, cb).primitive();
  Polynomial cg = poly_gcd(ca, cb);

  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial rem = pseudo_remainder(pa, pb, var);
    pa = pb;
    if (rem.is_zero()) {
      pb = rem;
    } else if (rem.degree_in(var) == 0) {
      // A nonzero remainder free of `var` means the primitive parts are coprime in `var`.
      pa = Polynomial::constant(1, a.vars());
      pb = Polynomial(a.vars());
    } else {
      pb = divide_exact(rem, content_in(rem, var)).primitive();
    }
  }
  return (cg * pa).primitive();
}

}  // namespace ga
