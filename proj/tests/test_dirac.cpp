#include "doctest.h"
#include "ga/dirac.hpp"
#include "ga/rng.hpp"
#include "ga/textio.hpp"

using namespace ga;

namespace {

const Signature kSta(1, 3);

Multivector<Rational> mv(const std::string& text) { return parse_multivector(text, kSta); }

AdaptedBasis boosted_frame() {
  return AdaptedBasis::from_versor(Versor<Rational>(mv("5/4 + 3/4*e01")));
}

AdaptedBasis rotated_frame() {
  return AdaptedBasis::from_versor(Versor<Rational>(mv("3/5 + 4/5*e12")));
}

SpinorCoefficients<Rational> rnd_coeffs(Rng& rng) {
  return {rng.rational_or_zero(), rng.rational_or_zero(), rng.rational_or_zero(),
          rng.rational_or_zero(), rng.rational_or_zero(), rng.rational_or_zero(),
          rng.rational_or_zero(), rng.rational_or_zero()};
}

}  // namespace

TEST_CASE("adapted bases") {
  AdaptedBasis std_frame = AdaptedBasis::standard();
  CHECK(std_frame.n(0) == mv("e0"));
  CHECK(std_frame.pair(1, 2) == mv("e12"));
  CHECK(std_frame.idempotent_plus() == mv("1/2 + 1/2*e123"));

  for (const AdaptedBasis& f : {boosted_frame(), rotated_frame()}) {
    CHECK(f.n(0) * f.n(0) == mv("1"));
    for (int i = 1; i < 4; ++i) {
      CHECK(f.n(i) * f.n(i) == mv("-1"));
      CHECK(extended_metric(f.n(0), f.n(i)).is_zero());
    }
  }
}

TEST_CASE("the parallel subalgebra basis") {
  AdaptedBasis std_frame = AdaptedBasis::standard();
  auto basis = parallel_subalgebra_basis(std_frame);
  CHECK(basis[0] == mv("1"));
  CHECK(basis[1] == mv("e1"));
  CHECK(basis[4] == mv("e12"));
  CHECK(basis[7] == mv("e123"));

  auto g = Grading<Rational>::vector(std_frame.n(0));
  for (const auto& b : basis) CHECK(g.project(b).orthogonal.is_zero());

  // Transformed frames still close with the same structure.
  CHECK_NOTHROW(parallel_subalgebra_basis(boosted_frame()));
  CHECK_NOTHROW(parallel_subalgebra_basis(rotated_frame()));
}

TEST_CASE("quaternion pair structure") {
  CHECK(mv("e123") * mv("e123") == mv("1"));
  AdaptedBasis std_frame = AdaptedBasis::standard();
  const auto& pp = std_frame.idempotent_plus();
  const auto& pm = std_frame.idempotent_minus();
  CHECK((pp * pm).is_zero());
  CHECK(pp + pm == mv("1"));
  // The labeling i = n23, j = n31, k = n12 realizes ij = k in the plus ideal.
  CHECK((std_frame.pair(2, 3) * pp) * (std_frame.pair(3, 1) * pp) == std_frame.pair(1, 2) * pp);

  for (const AdaptedBasis& f :
       {AdaptedBasis::standard(), boosted_frame(), rotated_frame()}) {
    for (const auto& check : quaternion_isomorphism_check(f)) {
      CAPTURE(check.id);
      CHECK(check.ok);
    }
  }
}

TEST_CASE("spinor realization and extraction") {
  AdaptedBasis std_frame = AdaptedBasis::standard();
  SpinorCoefficients<Rational> zero{};
  CHECK(make_spinor(zero, std_frame).is_zero());

  SpinorCoefficients<Rational> unit{};
  unit.a = 1;
  unit.c = 1;
  CHECK(make_spinor(unit, std_frame) == mv("1"));

  SpinorCoefficients<Rational> plus{};
  plus.a = 1;
  CHECK(make_spinor(plus, std_frame) == mv("1/2 + 1/2*e123"));

  Rng rng(401);
  for (const AdaptedBasis& f : {AdaptedBasis::standard(), boosted_frame()}) {
    auto g = Grading<Rational>::vector(f.n(0));
    for (int i = 0; i < 10; ++i) {
      auto k = rnd_coeffs(rng);
      Multivector<Rational> psi = make_spinor(k, f);
      CHECK(g.project(psi).orthogonal.is_zero());
      auto back = extract_spinor(psi, f);
      CHECK(back.a == k.a);
      CHECK(back.b12 == k.b12);
      CHECK(back.b23 == k.b23);
      CHECK(back.b31 == k.b31);
      CHECK(back.c == k.c);
      CHECK(back.d12 == k.d12);
      CHECK(back.d23 == k.d23);
      CHECK(back.d31 == k.d31);
    }
  }
  CHECK_THROWS_AS(extract_spinor(mv("e0"), std_frame), Error);
}

TEST_CASE("admissible sigma elements") {
  AdaptedBasis std_frame = AdaptedBasis::standard();
  CHECK(sigma_validate(make_sigma(0, 0, 1, std_frame), std_frame));  // n^12
  CHECK(sigma_validate(make_sigma(Rational(3, 5), Rational(4, 5), 0, std_frame), std_frame));
  CHECK(!sigma_validate(make_sigma(1, 1, 0, std_frame), std_frame));  // squares to -2
  // Valid sigmas commute with the central idempotents.
  Multivector<Rational> sigma = make_sigma(Rational(3, 5), Rational(4, 5), 0, std_frame);
  CHECK(sigma * std_frame.idempotent_plus() == std_frame.idempotent_plus() * sigma);
}

TEST_CASE("Dirac-Hestenes residual") {
  FieldMv constant = lift_to_field(mv("2 + e12"));
  CHECK(dirac_hestenes_residual(constant, 0).is_zero());
  CHECK(dirac_hestenes_residual(constant, 1) == lift_to_field(mv("-2*e0 - e012")));
  CHECK_THROWS_AS(dirac_hestenes_residual(lift_to_field(mv("e0")), 1), Error);

  // Frozen regression probe: psi = 1 + x0 e12, m = 2.
  FieldMv psi = lift_to_field(mv("1")) +
                lift_to_field(mv("e12")).scaled(RationalFunction::variable(0, 4));
  FieldMv r = dirac_hestenes_residual(psi, 2);
  FieldMv expect = lift_to_field(mv("-3*e0")) -
                   lift_to_field(mv("e012")).scaled(RationalFunction::variable(0, 4)).scaled_int(2);
  CHECK(r == expect);
}

TEST_CASE("general Dirac equation and its split form") {
  Rng rng(402);
  Rational m(3, 2);
  for (const AdaptedBasis& f :
       {AdaptedBasis::standard(), boosted_frame(), rotated_frame()}) {
    Multivector<Rational> sigma = make_sigma(Rational(3, 5), Rational(4, 5), 0, f);
    SplittingField s = f.splitting();

    // Constant spinor with m = 0 solves both forms.
    FieldMv constant = lift_to_field(make_spinor(rnd_coeffs(rng), f));
    auto r0 = general_dirac_residual(constant, sigma, f, 0);
    CHECK(r0.digen.is_zero());
    CHECK(r0.split_119.is_zero());
    CHECK(r0.relation.is_zero());

    // The mass term alone survives for constant spinors.
    FieldMv pplus = lift_to_field(f.idempotent_plus());
    auto rm = general_dirac_residual(pplus, sigma, f, m);
    CHECK(rm.digen == (pplus * lift_to_field(f.n(0))).scaled(RationalFunction::constant(m, 4)));
    CHECK(!rm.split_119.is_zero());
    CHECK(rm.relation.is_zero());

    // Random polynomial spinor fields: the two route residuals are linked by
    // right multiplication with n sigma, exactly.
    for (int i = 0; i < 6; ++i) {
      FieldMv psi = s.project(rng.field(kSta, 2, 2)).parallel;
      auto r = general_dirac_residual(psi, sigma, f, m);
      CHECK(r.relation.is_zero());
    }
  }

  AdaptedBasis std_frame = AdaptedBasis::standard();
  CHECK_THROWS_AS(general_dirac_residual(lift_to_field(mv("e0")), mv("e12"), std_frame, m), Error);
  CHECK_THROWS_AS(general_dirac_residual(lift_to_field(mv("1")), mv("e1"), std_frame, m), Error);
}

TEST_CASE("reduction to the Hestenes split in the standard frame") {
  // For n = e0 and sigma = e12, the split equation and the Dirac-Hestenes
  // equation correspond under psi = E + O |-> E + O e0 (grade-even and odd
  // parts), with the residual carried over by a right sigma factor and an e0
  // dressing of the parities. The two equations state their mass terms with
  // opposite signs, hence the -m below.
  AdaptedBasis frame = AdaptedBasis::standard();
  Multivector<Rational> sigma = frame.pair(1, 2);
  SplittingField s = frame.splitting();
  FieldMv e0 = lift_to_field(mv("e0"));
  FieldMv e12 = lift_to_field(mv("e12"));
  Rng rng(403);
  Rational m(3, 2);
  for (int i = 0; i < 8; ++i) {
    FieldMv psi = s.project(rng.field(kSta, 2, 2)).parallel;
    FieldMv even(kSta), odd(kSta);
    for (const auto& [b, c] : psi.terms())
      (grade_of(b) % 2 == 0 ? even : odd).add_term(b, c);

    FieldMv hestenes_side = dirac_hestenes_residual(even + odd * e0, -m) * e12;

    FieldMv r = general_dirac_residual(psi, sigma, frame, m).split_119;
    FieldMv r_even(kSta), r_odd(kSta);
    for (const auto& [b, c] : r.terms())
      (grade_of(b) % 2 == 0 ? r_even : r_odd).add_term(b, c);

    CHECK(hestenes_side == -r_odd - r_even * e0);
  }
}
