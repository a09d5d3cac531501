#pragma once

#include <array>
#include <string>
#include <vector>

#include "ga/calculus.hpp"

namespace ga {

// Constant frame adapted to an observer in Cl(1,3): n^0 = L e^0 ~L unit
// timelike, n^i = L e^i ~L spatial, pairwise anticommuting. Carries the
// directional-derivative coefficients that rewrite the Dirac operator in the
// frame, D_mu = sum_nu coef(mu,nu) d_nu.
class AdaptedBasis {
 public:
  static AdaptedBasis standard();
  static AdaptedBasis from_versor(const Versor<Rational>& l);

  Signature signature() const { return Signature(1, 3); }
  const Multivector<Rational>& n(int mu) const { return frame_.at(std::size_t(mu)); }
  // Index-raised frame element L gamma^mu ~L.
  Multivector<Rational> raised(int mu) const;
  Multivector<Rational> pair(int i, int j) const;  // n^i n^j
  const Multivector<Rational>& spatial_volume() const { return volume_; }
  const Multivector<Rational>& idempotent_plus() const { return p_plus_; }
  const Multivector<Rational>& idempotent_minus() const { return p_minus_; }
  const std::array<std::array<Rational, 4>, 4>& direction() const { return direction_; }

  FieldMv directional_derivative(const FieldMv& psi, int mu) const;
  SplittingField splitting() const { return SplittingField::constant(frame_[0]); }

 private:
  explicit AdaptedBasis(std::array<Multivector<Rational>, 4> frame);

  std::array<Multivector<Rational>, 4> frame_;
  Multivector<Rational> volume_, p_plus_, p_minus_;
  std::array<std::array<Rational, 4>, 4> direction_{};
};

// The eight alpha-even elements {1, n^i, n^{ij}, n^{123}}; construction
// verifies evenness, the odd counterparts, linear independence and closure.
std::array<Multivector<Rational>, 8> parallel_subalgebra_basis(const AdaptedBasis& frame);

struct NamedCheck {
  std::string id;
  bool ok;
};

// Cl(0,3) relations, centrality of the spatial volume, the central idempotent
// pair, and the 64-product multiplication table of {P±, n^{ij} P±} against a
// hand-coded double-quaternion table.
std::vector<NamedCheck> quaternion_isomorphism_check(const AdaptedBasis& frame);

template <class S>
struct SpinorCoefficients {
  S a, b12, b23, b31;
  S c, d12, d23, d31;
};

// a P+ + b_ij n^{ij} P+ + c P- + d_ij n^{ij} P-.
template <class S>
Multivector<S> make_spinor(const SpinorCoefficients<S>& k, const AdaptedBasis& frame);

// Exact inverse of make_spinor; throws NotEven when the element is not in the
// alpha-even span.
template <class S>
SpinorCoefficients<S> extract_spinor(const Multivector<S>& psi, const AdaptedBasis& frame);

Multivector<Rational> make_sigma(const Rational& a1, const Rational& a2, const Rational& a3,
                                 const AdaptedBasis& frame);
// sigma^2 = -1 and [n, sigma] = 0, both exact.
bool sigma_validate(const Multivector<Rational>& sigma, const AdaptedBasis& frame);

// d psi e^1 e^2 - m psi e^0 for psi valued in the grade-even subalgebra.
FieldMv dirac_hestenes_residual(const FieldMv& psi, const Rational& m);

struct GeneralDiracResiduals {
  FieldMv digen;      // breve(d) psi sigma + m psi n
  FieldMv split_119;  // n^k D_k psi + D_n psihat - m psi sigma
  FieldMv relation;   // split_119 + digen * n * sigma, exactly zero
};

GeneralDiracResiduals general_dirac_residual(const FieldMv& psi, const Multivector<Rational>& sigma,
                                             const AdaptedBasis& frame, const Rational& m);

}  // namespace ga
