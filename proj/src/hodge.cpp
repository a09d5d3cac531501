#include "ga/hodge.hpp"

namespace ga {

int dhso_double_sign(const Signature& sig, int grade) {
  if (sig.p < 1) fail(ErrorCode::NotUnitNorm, "no unit timelike direction in this signature");
  if (grade < 0 || grade > sig.dim() - 1) fail(ErrorCode::BadGrade, "no parallel elements of this grade");
  Multivector<Rational> n = Multivector<Rational>::basis_vector(sig, 0);
  auto o = Orientation<Rational>::from_unit_vector(n);
  // Lowest spatial blade of the requested grade in the model frame.
  Blade b = Blade(((1u << grade) - 1u) << 1);
  Multivector<Rational> x = Multivector<Rational>::blade(sig, b);
  Multivector<Rational> dd = parallel_hodge(parallel_hodge(x, o), o);
  Rational c = dd.coefficient(b);
  if (!(dd == x.scaled(c)) || (c != 1 && c != -1))
    fail(ErrorCode::BadGrade, "double dual is not a sign on this grade");
  return c == 1 ? +1 : -1;
}

}  // namespace ga
