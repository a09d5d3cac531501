#include "ga/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace ga {

std::string blade_name(Blade b) {
  if (b == 0) return "1";
  std::string s = "e";
  for (int mu = 0; mu < 16; ++mu)
    if (b & (1u << mu)) s += char('0' + mu);
  return s;
}

namespace {

std::vector<std::pair<Blade, const Rational*>> sorted_terms(const Multivector<Rational>& m) {
  std::vector<std::pair<Blade, const Rational*>> ts;
  ts.reserve(m.terms().size());
  for (const auto& [b, c] : m.terms()) ts.emplace_back(b, &c);
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (grade_of(a.first) != grade_of(b.first)) return grade_of(a.first) < grade_of(b.first);
    return a.first < b.first;
  });
  return ts;
}

std::string magnitude_text(const Rational& c, Blade b) {
  Rational a = abs_of(c);
  if (b == 0) return to_string(a);
  if (a == 1) return blade_name(b);
  return to_string(a) + "*" + blade_name(b);
}

}  // namespace

std::string to_text(const Multivector<Rational>& m) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : sorted_terms(m)) {
    if (first) {
      if (*c < 0) os << "-";
      first = false;
    } else {
      os << (*c < 0 ? " - " : " + ");
    }
    os << magnitude_text(*c, b);
  }
  return os.str();
}

std::string to_text(const Multivector<RationalFunction>& m) {
  if (m.is_zero()) return "0";
  std::vector<std::pair<Blade, const RationalFunction*>> ts;
  for (const auto& [b, c] : m.terms()) ts.emplace_back(b, &c);
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (grade_of(a.first) != grade_of(b.first)) return grade_of(a.first) < grade_of(b.first);
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : ts) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c->to_string() << "]";
    if (b != 0) os << "*" << blade_name(b);
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }
  bool at_digit() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) error("expected an integer");
    return Integer(s.substr(start, pos - start));
  }

  Rational rational() {
    Integer num = integer();
    if (accept('/')) {
      Integer den = integer();
      if (den == 0) error("zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Blade blade(Signature sig) {
    skip_ws();
    if (pos >= s.size() || s[pos] != 'e') error("expected a blade name");
    ++pos;
    Blade b = 0;
    int prev = -1;
    bool any = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      int mu = s[pos] - '0';
      if (mu >= sig.dim()) error("blade index outside the algebra");
      if (mu <= prev) error("blade indices must be strictly ascending");
      b = Blade(b | (1u << mu));
      prev = mu;
      any = true;
      ++pos;
    }
    if (!any) error("blade name needs at least one index");
    return b;
  }

  // term := rational ['*' blade] | blade
  void term(Multivector<Rational>& acc, bool negative, Signature sig) {
    skip_ws();
    if (pos >= s.size()) error("expected a term");
    Rational coeff = 1;
    Blade b = 0;
    if (at_digit()) {
      coeff = rational();
      if (accept('*')) b = blade(sig);
    } else if (s[pos] == 'e') {
      b = blade(sig);
    } else {
      error("expected a term");
    }
    acc.add_term(b, negative ? Rational(-coeff) : coeff);
  }

  Multivector<Rational> expression(Signature sig) {
    Multivector<Rational> acc(sig);
    bool negative = accept('-');
    term(acc, negative, sig);
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (accept('+'))
        term(acc, false, sig);
      else if (accept('-'))
        term(acc, true, sig);
      else
        error("expected '+' or '-'");
    }
    return acc;
  }
};

}  // namespace

Multivector<Rational> parse_multivector(const std::string& text, Signature sig) {
  Parser p{text};
  return p.expression(sig);
}

}  // namespace ga
