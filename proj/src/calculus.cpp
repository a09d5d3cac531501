#include "ga/calculus.hpp"

namespace ga {

namespace {

RationalFunction rf_one(Signature sig) { return RationalFunction::constant(1, sig.dim()); }

FieldMv half(const FieldMv& a) { return a.halved(); }

}  // namespace

FieldMv coframe_raised(Signature sig, int mu) {
  FieldMv g = FieldMv::basis_vector(sig, mu);
  return sig.metric_sign(mu) < 0 ? -g : g;
}

FieldMv field_partial(const FieldMv& psi, int mu) {
  if (mu < 0 || mu >= psi.signature().dim()) fail(ErrorCode::BadIndex, "coordinate out of range");
  FieldMv r(psi.signature());
  for (const auto& [b, c] : psi.terms()) r.add_term(b, c.derivative(mu));
  return r;
}

FieldMv differential(const FieldMv& psi) {
  FieldMv r(psi.signature());
  for (int mu = 0; mu < psi.signature().dim(); ++mu)
    r += wedge(coframe_raised(psi.signature(), mu), field_partial(psi, mu));
  return r;
}

FieldMv codifferential(const FieldMv& psi) {
  FieldMv r(psi.signature());
  for (int mu = 0; mu < psi.signature().dim(); ++mu)
    r -= lcontract(coframe_raised(psi.signature(), mu), field_partial(psi, mu));
  return r;
}

FieldMv dirac(const FieldMv& psi) {
  FieldMv split_route = differential(psi) - codifferential(psi);
  FieldMv product_route(psi.signature());
  for (int mu = 0; mu < psi.signature().dim(); ++mu)
    product_route += coframe_raised(psi.signature(), mu) * field_partial(psi, mu);
  if (!(split_route == product_route))
    fail(ErrorCode::NotHomogeneous, "dirac operator routes disagree");  // unreachable
  return split_route;
}

SplittingField::SplittingField(FieldMv n) : n_(std::move(n)) {
  if (n_.is_zero() || !n_.is_homogeneous() || n_.grade() != 1)
    fail(ErrorCode::NotUnit, "splitting field must be a grade-1 field");
  FieldMv sq = n_ * n_;
  if (!(sq.is_scalar() && (sq.scalar_part() - rf_one(n_.signature())).is_zero()))
    fail(ErrorCode::NotUnit, "splitting field must satisfy n^2 = 1 exactly");
  omega_.reserve(std::size_t(n_.signature().dim()));
  for (int mu = 0; mu < n_.signature().dim(); ++mu) {
    FieldMv dn = field_partial(n_, mu);
    if (!lcontract(n_, dn).is_zero())
      fail(ErrorCode::NotUnit, "n . d_mu n must vanish for a unit field");
    FieldMv w = n_ * dn;
    if (!(w == grade_projection(w, 2)))
      fail(ErrorCode::NotUnit, "connection component is not a 2-form");
    if (!(dn == -commutator_half(w, n_)))
      fail(ErrorCode::NotUnit, "connection does not reproduce d_mu n");
    omega_.push_back(std::move(w));
  }
}

SplittingField SplittingField::constant(const Multivector<Rational>& n) {
  return SplittingField(lift_to_field(n));
}

SplittingField SplittingField::rational_boost(Signature sig, int axis, int var) {
  if (axis <= 0 || axis >= sig.dim() || sig.metric_sign(0) != 1 || sig.metric_sign(axis) != -1)
    fail(ErrorCode::BadIndex, "boost needs a timelike 0 direction and a spacelike axis");
  const int d = sig.dim();
  Polynomial t = Polynomial::variable(var, d);
  Polynomial one = Polynomial::constant(1, d);
  RationalFunction c0(one + t * t, one - t * t);
  RationalFunction c1(t.scaled(2), one - t * t);
  FieldMv n(sig);
  n.add_term(Blade(1u << 0), c0);
  n.add_term(Blade(1u << axis), c1);
  return SplittingField(n);
}

FieldMv SplittingField::alpha(const FieldMv& psi) const {
  return n_ * grade_involution(psi) * n_;  // n^-1 = n
}

SplitParts<RationalFunction> SplittingField::project(const FieldMv& psi) const {
  FieldMv a = alpha(psi);
  return {half(psi + a), half(psi - a)};
}

FieldMv SplittingField::gamma_parallel(int mu) const {
  return coframe_raised(signature(), mu) - n_.scaled(component(mu));
}

FieldMv SplittingField::gamma_orthogonal(int mu) const { return n_.scaled(component(mu)); }

std::vector<FieldMv> omega(const SplittingField& s) { return s.connection(); }

FieldMv omega_contracted(const SplittingField& s) {
  FieldMv acc(s.signature());
  const auto& ws = s.connection();
  for (int mu = 0; mu < s.signature().dim(); ++mu) acc += ws[std::size_t(mu)].scaled(s.component(mu));
  return acc;
}

FieldMv commutator_half(const FieldMv& a, const FieldMv& b) { return half(a * b - b * a); }

CommutatorProjectionResiduals commutator_projection_identities(const SplittingField& s,
                                                               const FieldMv& psi) {
  auto parts = s.project(psi);
  const auto& ws = s.connection();
  CommutatorProjectionResiduals r;
  for (int mu = 0; mu < s.signature().dim(); ++mu) {
    const FieldMv& w = ws[std::size_t(mu)];
    FieldMv dpar = field_partial(parts.parallel, mu);
    FieldMv dperp = field_partial(parts.orthogonal, mu);
    r.parallel_rule.push_back(commutator_half(w, parts.parallel) + s.project(dpar).orthogonal);
    r.orthogonal_rule.push_back(commutator_half(w, parts.orthogonal) + s.project(dperp).parallel);
    r.parallel_projection.push_back(s.project(dpar).parallel -
                                    (dpar + commutator_half(w, parts.parallel)));
  }
  return r;
}

FieldMv lie_derivative(const FieldMv& n, const FieldMv& psi) {
  return lcontract(n, differential(psi)) + differential(lcontract(n, psi));
}

FieldMv covariant_parallel(const SplittingField& s, int mu, const FieldMv& psi_par) {
  if (!s.project(psi_par).orthogonal.is_zero())
    fail(ErrorCode::NotParallel, "covariant derivative expects a parallel field");
  const auto& ws = s.connection();
  FieldMv d = field_partial(psi_par, mu) + commutator_half(ws[std::size_t(mu)], psi_par);
  if (!s.project(d).orthogonal.is_zero())
    fail(ErrorCode::NotParallel, "covariant derivative left the parallel subspace");
  return d;
}

SplitDifferential split_differential(const SplittingField& s, const FieldMv& psi,
                                     bool with_covariant_forms) {
  const Signature sig = s.signature();
  auto parts = s.project(psi);
  FieldMv d_par = differential(parts.parallel);
  FieldMv d_perp = differential(parts.orthogonal);
  auto d_par_parts = s.project(d_par);
  auto d_perp_parts = s.project(d_perp);

  SplitDifferential out{d_par_parts.parallel,   d_par_parts.orthogonal, d_perp_parts.orthogonal,
                        d_perp_parts.parallel,  FieldMv(sig),           FieldMv(sig),
                        FieldMv(sig)};

  out.perp_rule_residual =
      out.d_perp_of_par - wedge(s.n(), lie_derivative(s.n(), parts.parallel));
  if (!with_covariant_forms) return out;

  // (d psi_perp)_perp = -n ^ gamma_par^mu ^ D_mu(n . psi) + n ^ lie_n n ^ (n . psi_perp)
  FieldMv contracted = lcontract(s.n(), psi);
  const auto& ws = s.connection();
  FieldMv first(sig);
  for (int mu = 0; mu < sig.dim(); ++mu) {
    FieldMv cov = field_partial(contracted, mu) + commutator_half(ws[std::size_t(mu)], contracted);
    first += wedge(s.n(), wedge(s.gamma_parallel(mu), cov));
  }
  FieldMv lie_n_n = lie_derivative(s.n(), s.n());
  FieldMv second = wedge(s.n(), wedge(lie_n_n, lcontract(s.n(), parts.orthogonal)));
  out.decoi_residual = out.d_par_of_perp - (-first + second);

  FieldMv covariant_route(sig);
  for (int mu = 0; mu < sig.dim(); ++mu) {
    FieldMv cov = field_partial(parts.parallel, mu) + commutator_half(ws[std::size_t(mu)], parts.parallel);
    covariant_route += wedge(s.gamma_parallel(mu), cov);
  }
  out.covariant_route_residual = out.d_par_of_par - covariant_route;
  return out;
}

LieCommutatorReport lie_d_parallel_commutator(const SplittingField& s, const FieldMv& psi) {
  FieldMv d_psi = differential(psi);
  FieldMv d_par_psi = s.project(d_psi).parallel;
  FieldMv lie_then = lie_derivative(s.n(), d_par_psi);
  FieldMv then_lie = s.project(differential(lie_derivative(s.n(), psi))).parallel;
  FieldMv lie_n_n = lie_derivative(s.n(), s.n());
  FieldMv correction = wedge(lie_n_n, lcontract(s.n(), d_psi));
  LieCommutatorReport r{lie_then - (then_lie - correction), lie_n_n, lie_n_n.is_zero(),
                        lie_then - then_lie};
  return r;
}

CodifferentialParallelReport codifferential_parallel_identity(const SplittingField& s,
                                                              const FieldMv& psi_par) {
  if (!s.project(psi_par).orthogonal.is_zero())
    fail(ErrorCode::NotParallel, "identity expects a parallel field");
  const Signature sig = s.signature();

  FieldMv contracted_dirac(sig);  // d . psi = gamma^mu . d_mu psi
  for (int mu = 0; mu < sig.dim(); ++mu)
    contracted_dirac += lcontract(coframe_raised(sig, mu), field_partial(psi_par, mu));
  FieldMv lhs = s.project(contracted_dirac).parallel;

  auto o = Orientation<RationalFunction>::from_unit_vector(s.n());
  FieldMv dual = parallel_hodge(grade_involution(psi_par), o);
  FieldMv d_par_dual = s.project(differential(dual)).parallel;
  FieldMv rhs = -parallel_hodge_inverse(d_par_dual, o) -
                lcontract(lie_derivative(s.n(), s.n()), psi_par);

  CodifferentialParallelReport r{lhs - rhs, FieldMv(sig)};

  const auto& ws = s.connection();
  FieldMv component_route(sig);
  for (int mu = 0; mu < sig.dim(); ++mu) {
    FieldMv cov = field_partial(psi_par, mu) + commutator_half(ws[std::size_t(mu)], psi_par);
    component_route += lcontract(s.gamma_parallel(mu), cov);
  }
  component_route -= lcontract(s.n(), commutator_half(omega_contracted(s), psi_par));
  r.component_residual = lhs - component_route;
  return r;
}

DualOperatorSample dual_decomposition_operators(const SplittingField& s, const FieldMv& psi) {
  if (!psi.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "dual operator sweep needs one grade");
  const Signature sig = s.signature();
  const int k = psi.grade();
  const int d = sig.dim();
  const FieldMv& n = s.n();

  DualOperatorSample out{k,
                         FieldMv(sig), FieldMv(sig), FieldMv(sig), FieldMv(sig), FieldMv(sig),
                         FieldMv(sig), FieldMv(sig), FieldMv(sig), FieldMv(sig), FieldMv(sig),
                         FieldMv(sig), FieldMv(sig)};

  out.alpha_n = s.alpha(psi);
  auto o = Orientation<RationalFunction>::from_unit_vector(n);
  out.alpha_tau = dual_alpha(psi, o);

  out.d_op = differential(out.alpha_n);
  out.delta_op = codifferential(out.alpha_n);
  out.dirac_op = out.d_op - out.delta_op;

  FieldMv psi_hat = grade_involution(psi);
  FieldMv dn = differential(n);  // n^-1 = n, so d n^-1 = d n
  FieldMv d_psi = differential(psi);
  FieldMv d_psi_hat = differential(psi_hat);
  int sgn_k = k % 2 == 0 ? +1 : -1;
  int delta_const = (k * (d - 1)) % 2 == 0 ? +1 : -1;  // (-1)^{k(p+q-1)}
  int beta_const = hodge_beta(sig, k);
  int bd = beta_const * delta_const;

  auto scaled_int = [](FieldMv m, int c) { return c < 0 ? -std::move(m) : std::move(m); };

  out.f111 = dn * psi_hat * n - n * d_psi_hat * n + scaled_int(n * psi_hat * dn, sgn_k);
  out.f112 = scaled_int(dn * psi_hat * n - n * d_psi_hat * n - scaled_int(n * psi_hat * dn, sgn_k),
                        delta_const);
  int sign113 = -((d - 1) % 2 == 0 ? +1 : -1) * beta_const;
  out.f113 = scaled_int(n * psi_hat * dn + n * d_psi * n + scaled_int(dn * psi_hat * n, sgn_k),
                        sign113);
  out.f114 = scaled_int(-(n * psi_hat * dn) + n * d_psi * n - scaled_int(dn * psi_hat * n, sgn_k),
                        delta_const * beta_const);
  // (1 + sgn*bd) dn psihat n - n (d psihat - bd d psi) n + (bd - sgn) n psihat dn
  FieldMv term1 = (dn * psi_hat * n).scaled_int(1 + sgn_k * bd);
  FieldMv term2 = n * (d_psi_hat - scaled_int(d_psi, bd)) * n;
  FieldMv term3 = (n * psi_hat * dn).scaled_int(bd - sgn_k);
  out.f_mussa = term1 - term2 + term3;

  out.zaka_bracket = scaled_int(n * d_psi * n, sgn_k) + n * psi * dn;
  out.f_zaka = out.zaka_bracket.scaled_int(-2);
  return out;
}

bool frobenius_check(const FieldMv& n) { return wedge(n, differential(n)).is_zero(); }

ProjectedDirac projected_dirac_operator(const SplittingField& s, const FieldMv& psi) {
  const Signature sig = s.signature();
  ProjectedDirac out{FieldMv(sig), FieldMv(sig)};
  for (int mu = 0; mu < sig.dim(); ++mu) {
    FieldMv dmu = field_partial(psi, mu);
    out.parallel += s.gamma_parallel(mu) * dmu;
    out.orthogonal += s.gamma_orthogonal(mu) * dmu;
  }
  return out;
}

}  // namespace ga
