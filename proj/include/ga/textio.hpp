#pragma once

#include <string>

#include "ga/multivector.hpp"

namespace ga {

std::string blade_name(Blade b);

// Canonical text form: terms sorted by grade then blade, "5/6*e01" style,
// unit coefficients elided, scalar terms as bare rationals, zero as "0".
std::string to_text(const Multivector<Rational>& m);

// Field coefficients are printed in brackets: "[x1 + 1]*e01".
std::string to_text(const Multivector<RationalFunction>& m);

// Parses the canonical form (strictly ascending blade indices). Throws
// Error(ParseError) with a byte offset in the message on malformed input.
Multivector<Rational> parse_multivector(const std::string& text, Signature sig);

}  // namespace ga
