#include "doctest.h"
#include "ga/grading.hpp"
#include "ga/rng.hpp"
#include "ga/textio.hpp"

using namespace ga;

namespace {

const Signature kSta(1, 3);

Multivector<Rational> mv(const std::string& text, Signature sig = kSta) {
  return parse_multivector(text, sig);
}

}  // namespace

TEST_CASE("alpha on the standard splitting") {
  auto g = Grading<Rational>::vector(mv("e0"));
  CHECK(g.alpha(mv("e1")) == mv("e1"));
  CHECK(g.alpha(mv("e0")) == mv("-1*e0"));
  // Bivectorial splitter e0j sends e0 to -e0.
  auto g2 = Grading<Rational>::k_form(mv("e02"));
  CHECK(g2.alpha(mv("e0")) == mv("-1*e0"));
}

TEST_CASE("projection splits into eigenspaces") {
  auto g = Grading<Rational>::vector(mv("e0"));
  auto parts = g.project(mv("e0 + e1"));
  CHECK(parts.parallel == mv("e1"));
  CHECK(parts.orthogonal == mv("e0"));

  auto fixed = g.project(mv("2 + e23 - e123"));
  CHECK(fixed.parallel == mv("2 + e23 - e123"));
  CHECK(fixed.orthogonal.is_zero());

  auto g3 = Grading<Rational>::k_form(mv("e123"));
  for (const char* b : {"e01", "e02", "e03"}) {
    auto p = g3.project(mv(b));
    CHECK(p.parallel.is_zero());
    CHECK(p.orthogonal == mv(b));
  }
}

TEST_CASE("contraction form of the projectors") {
  auto parts = project_contraction_form(mv("e0"), mv("e01"));
  CHECK(parts.parallel.is_zero());
  CHECK(parts.orthogonal == mv("e01"));
  CHECK(project_contraction_form(mv("e0"), mv("1")).parallel == mv("1"));
  CHECK(project_contraction_form(mv("e0"), mv("e123")).parallel == mv("e123"));
  CHECK_THROWS_AS(project_contraction_form(mv("2*e0"), mv("e1")), Error);
}

TEST_CASE("projector algebra and the two projector forms agree") {
  Rng rng(101);
  for (Signature sig : {Signature(1, 3), Signature(3, 0), Signature(2, 2), Signature(0, 3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      Multivector<Rational> n = rng.unit_vector(sig);
      auto g = Grading<Rational>::vector(n);
      Multivector<Rational> psi = rng.multivector(sig);
      auto parts = g.project(psi);
      CHECK(parts.parallel + parts.orthogonal == psi);
      CHECK(g.project(parts.parallel).parallel == parts.parallel);
      CHECK(g.project(parts.parallel).orthogonal.is_zero());
      CHECK(g.project(parts.orthogonal).orthogonal == parts.orthogonal);
      CHECK(g.project(parts.orthogonal).parallel.is_zero());
      auto cf = project_contraction_form(n, psi);
      CHECK(cf.parallel == parts.parallel);
      CHECK(cf.orthogonal == parts.orthogonal);
    }
  }
}

TEST_CASE("alpha is an involutive automorphism commuting with the hat") {
  Rng rng(102);
  for (int trial = 0; trial < 30; ++trial) {
    Multivector<Rational> n = rng.unit_vector(kSta);
    auto g = Grading<Rational>::vector(n);
    Multivector<Rational> a = rng.multivector(kSta), b = rng.multivector(kSta);
    CHECK(g.alpha(g.alpha(a)) == a);
    CHECK(g.alpha(a * b) == g.alpha(a) * g.alpha(b));
    CHECK(g.alpha(grade_involution(a)) == grade_involution(g.alpha(a)));
  }
}

TEST_CASE("dilation invariance of the inner automorphism") {
  Rng rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    Multivector<Rational> n = rng.unit_vector(kSta);
    Rational lambda = rng.rational();
    auto g1 = Grading<Rational>::vector(n);
    auto g2 = Grading<Rational>::vector(n.scaled(lambda));
    Multivector<Rational> psi = rng.multivector(kSta);
    CHECK(g1.alpha(psi) == g2.alpha(psi));
  }
}

TEST_CASE("closure laws of the Z2 grading") {
  Rng rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector<Rational> n = rng.unit_vector(kSta);
    auto g = Grading<Rational>::vector(n);
    auto a = g.project(rng.multivector(kSta));
    auto b = g.project(rng.multivector(kSta));
    CHECK(g.project(a.parallel * b.parallel).orthogonal.is_zero());
    CHECK(g.project(a.parallel * b.orthogonal).parallel.is_zero());
    CHECK(g.project(a.orthogonal * b.parallel).parallel.is_zero());
    CHECK(g.project(a.orthogonal * b.orthogonal).orthogonal.is_zero());
  }
}

TEST_CASE("anchor identities of the splitting") {
  Rng rng(105);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector<Rational> n = rng.unit_vector(kSta);
    auto g = Grading<Rational>::vector(n);
    Multivector<Rational> psi = rng.multivector(kSta);
    auto parts = g.project(psi);
    CHECK(parts.parallel * n == n * grade_involution(parts.parallel));
    CHECK(parts.orthogonal * n == -(n * grade_involution(parts.orthogonal)));
    CHECK(n * psi * n ==
          grade_involution(parts.parallel) - grade_involution(parts.orthogonal));
    // n . psi_par = 0 and n ^ psi_perp = 0.
    CHECK(lcontract(n, parts.parallel).is_zero());
    CHECK(wedge(n, parts.orthogonal).is_zero());
  }
}

TEST_CASE("product splitting laws") {
  auto g = Grading<Rational>::vector(mv("e0"));
  auto r1 = split_product_laws(g, mv("e1"), mv("e1"));
  CHECK(r1.product_parallel.is_zero());
  CHECK(r1.product_orthogonal.is_zero());
  auto r2 = split_product_laws(g, mv("e0"), mv("e0"));
  CHECK(r2.product_parallel.is_zero());

  Rng rng(106);
  for (int trial = 0; trial < 40; ++trial) {
    Multivector<Rational> n = rng.unit_vector(kSta);
    auto gn = Grading<Rational>::vector(n);
    auto r = split_product_laws(gn, rng.multivector(kSta), rng.multivector(kSta));
    CHECK(r.product_parallel.is_zero());
    CHECK(r.product_orthogonal.is_zero());
    CHECK(r.wedge_parallel.is_zero());
    CHECK(r.wedge_orthogonal.is_zero());
  }
}

TEST_CASE("non-involutive splitters are rejected by project") {
  // 1 + e01 squares to 2 e01 + 2, which is not central... its sandwich is
  // still an automorphism but not an involution; project must refuse.
  Multivector<Rational> phi = mv("2 + e01");
  auto g = Grading<Rational>::general(phi, SignMode::plain_sandwich);
  CHECK(!g.involutive());
  CHECK_THROWS_AS(g.project(mv("e0")), Error);
  CHECK_NOTHROW(g.alpha(mv("e0")));
}

TEST_CASE("metric split") {
  auto ms = metric_split(mv("e0"));
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      Rational expect = 0;
      if (mu == nu) expect = (mu == 0) ? Rational(0) : Rational(-1);
      CHECK(ms.h[mu][nu] == expect);
    }
  }

  Multivector<Rational> boosted = mv("5/4*e0 + 3/4*e1");
  auto mb = metric_split(boosted);
  CHECK(mb.h[0][0] == Rational(-9, 16));
  CHECK(mb.h[0][1] == Rational(15, 16));
  for (const Rational& c : metric_split_kernel(mb, boosted)) CHECK(c.is_zero());

  Rng rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    Multivector<Rational> n = rng.unit_vector(kSta);
    auto m = metric_split(n);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        Rational g_mn = mu == nu ? Rational(kSta.metric_sign(mu)) : Rational(0);
        CHECK(m.h[mu][nu] + m.g_perp[mu][nu] == g_mn);
        CHECK(m.h[mu][nu] == m.h[nu][mu]);
      }
    for (const Rational& c : metric_split_kernel(m, n)) CHECK(c.is_zero());
    // g_par(u, v) = g(u, v) - (u.n)(v.n) against the component route.
    Multivector<Rational> u = grade_projection(rng.multivector(kSta), 1);
    Multivector<Rational> v = grade_projection(rng.multivector(kSta), 1);
    Rational lhs = extended_metric(u, v) - extended_metric(u, n) * extended_metric(v, n);
    Rational rhs = 0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        rhs += m.h[mu][nu] * u.coefficient(Blade(1u << mu)) * v.coefficient(Blade(1u << nu));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("versors and adapted frames") {
  auto identity = Versor<Rational>::identity(kSta);
  auto frame = adapted_frame(identity);
  CHECK(frame[0] == mv("e0"));
  CHECK(frame[2] == mv("e2"));

  // Boost versor (5 + 3 e01)/4; the sandwich output is fixed by the product
  // kernel and frozen here.
  Versor<Rational> boost(mv("5/4 + 3/4*e01"));
  auto bframe = adapted_frame(boost);
  CHECK(bframe[0] == mv("17/8*e0 - 15/8*e1"));
  CHECK((bframe[0] * bframe[0]) == mv("1"));
  CHECK(extended_metric(bframe[0], bframe[2]).is_zero());

  CHECK_THROWS_AS(Versor<Rational>(mv("e0")), Error);        // odd
  CHECK_THROWS_AS(Versor<Rational>(mv("1 + e01")), Error);   // L ~L != 1

  Rng rng(108);
  for (int trial = 0; trial < 10; ++trial) {
    auto l = rng.versor(kSta, 3);
    auto f = adapted_frame(l);
    CHECK(is_unit_scalar(f[0] * f[0]));
    for (int i = 1; i < 4; ++i) CHECK(extended_metric(f[0], f[std::size_t(i)]).is_zero());
  }
}

TEST_CASE("null splitters are rejected") {
  // (e0 + e1)^2 = 0 in Cl(1,3).
  CHECK_THROWS_AS(Grading<Rational>::vector(mv("e0 + e1")), Error);
}
