#include "ga/suites.hpp"

#include <array>
#include <functional>
#include <sstream>

#include "ga/dirac.hpp"
#include "ga/rng.hpp"
#include "ga/textio.hpp"

namespace ga {

namespace {

const Signature kSta(1, 3);

// Accumulates one check across many runs; the first failing input is kept as
// the witness.
class Tally {
 public:
  Tally(std::string id, std::string ref) : id_(std::move(id)), ref_(std::move(ref)) {}

  void note(bool ok, const std::function<std::string()>& witness) {
    ++runs_;
    if (!ok) {
      ++failures_;
      if (witness_.empty()) witness_ = witness();
    }
  }
  void note(bool ok) {
    note(ok, [] { return std::string("unrecorded"); });
  }

  CheckRecord record() const {
    CheckRecord r;
    r.id = id_;
    r.paper_ref = ref_;
    r.status = failures_ == 0 ? CheckStatus::pass : CheckStatus::fail;
    std::ostringstream os;
    if (failures_ == 0)
      os << "0 (exact over " << runs_ << " runs)";
    else
      os << failures_ << " of " << runs_ << " runs left a nonzero residual";
    r.residual = os.str();
    r.witness = witness_;
    return r;
  }

 private:
  std::string id_, ref_;
  long runs_ = 0, failures_ = 0;
  std::string witness_;
};

std::string sig_text(Signature s) {
  return "Cl(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
}

void info_record(Report& report, const std::string& id, const std::string& ref,
                 CheckStatus status, const std::string& residual, const std::string& witness) {
  report.records.push_back({id, ref, status, residual, witness});
}

// ---------------------------------------------------------------- projectors

void run_projectors(const SuiteConfig& cfg, Report& report) {
  Rng rng(cfg.seed);
  const Signature sig = cfg.signature;
  std::vector<Multivector<Rational>> splitters;
  std::vector<Grading<Rational>> gradings;
  for (int i = 0; i < 5; ++i) {
    splitters.push_back(rng.unit_vector(sig));
    gradings.push_back(Grading<Rational>::vector(splitters.back()));
  }

  Tally idem("projector_idempotent", "splitting projectors");
  Tally ortho("projector_mutual_annihilation", "splitting projectors");
  Tally partition("projector_partition_of_identity", "splitting projectors");
  Tally contraction("projection_contraction_form_agreement", "contraction form of the projectors");
  Tally involutive("alpha_involutive", "inner automorphism squares to the identity");
  Tally automorphism("alpha_automorphism", "inner automorphism respects the product");
  Tally hat("alpha_commutes_with_grade_involution", "commuting square with the hat");
  Tally dilation("alpha_dilation_invariance", "splitter rescaling changes nothing");
  Tally anchors("splitting_anchor_identities", "psi_par n = n hat(psi_par) family");

  for (long t = 0; t < cfg.trials; ++t) {
    const auto& n = splitters[std::size_t(t % 5)];
    const auto& g = gradings[std::size_t(t % 5)];
    Multivector<Rational> psi = rng.multivector(sig);
    Multivector<Rational> phi = rng.multivector(sig);
    auto w = [&] { return "n = " + to_text(n) + "; psi = " + to_text(psi); };

    auto parts = g.project(psi);
    idem.note(g.project(parts.parallel).parallel == parts.parallel &&
                  g.project(parts.orthogonal).orthogonal == parts.orthogonal,
              w);
    ortho.note(g.project(parts.parallel).orthogonal.is_zero() &&
                   g.project(parts.orthogonal).parallel.is_zero(),
               w);
    partition.note(parts.parallel + parts.orthogonal == psi, w);
    auto cf = project_contraction_form(n, psi);
    contraction.note(cf.parallel == parts.parallel && cf.orthogonal == parts.orthogonal, w);
    involutive.note(g.alpha(g.alpha(psi)) == psi, w);
    automorphism.note(g.alpha(psi * phi) == g.alpha(psi) * g.alpha(phi), w);
    hat.note(g.alpha(grade_involution(psi)) == grade_involution(g.alpha(psi)), w);
    Rational lambda = rng.rational();
    dilation.note(Grading<Rational>::vector(n.scaled(lambda)).alpha(psi) == g.alpha(psi), w);
    bool a1 = parts.parallel * n == n * grade_involution(parts.parallel);
    bool a2 = parts.orthogonal * n == -(n * grade_involution(parts.orthogonal));
    bool a3 = n * psi * n ==
              grade_involution(parts.parallel) - grade_involution(parts.orthogonal);
    anchors.note(a1 && a2 && a3, w);
  }
  for (const Tally* t :
       {&idem, &ortho, &partition, &contraction, &involutive, &automorphism, &hat, &dilation, &anchors})
    report.records.push_back(t->record());
}

// ------------------------------------------------------------------ products

void run_products(const SuiteConfig& cfg, Report& report) {
  Rng rng(cfg.seed);
  const Signature sig = cfg.signature;
  Tally law_par("product_split_parallel", "parallel part of the split product");
  Tally law_perp("product_split_orthogonal", "orthogonal part of the split product");
  Tally wedge_par("wedge_split_parallel", "parallel part of the split wedge");
  Tally wedge_perp("wedge_split_orthogonal", "orthogonal part of the split wedge");
  Tally closure("z2_closure", "even/odd parts multiply by parity addition");

  for (long t = 0; t < cfg.trials; ++t) {
    Multivector<Rational> n = rng.unit_vector(sig);
    auto g = Grading<Rational>::vector(n);
    Multivector<Rational> v = rng.multivector(sig);
    Multivector<Rational> phi = rng.multivector(sig);
    auto w = [&] { return "n = " + to_text(n) + "; v = " + to_text(v) + "; phi = " + to_text(phi); };
    auto r = split_product_laws(g, v, phi);
    law_par.note(r.product_parallel.is_zero(), w);
    law_perp.note(r.product_orthogonal.is_zero(), w);
    wedge_par.note(r.wedge_parallel.is_zero(), w);
    wedge_perp.note(r.wedge_orthogonal.is_zero(), w);
    auto pv = g.project(v);
    auto pphi = g.project(phi);
    closure.note(g.project(pv.parallel * pphi.parallel).orthogonal.is_zero() &&
                     g.project(pv.parallel * pphi.orthogonal).parallel.is_zero() &&
                     g.project(pv.orthogonal * pphi.orthogonal).orthogonal.is_zero(),
                 w);
  }
  for (const Tally* t : {&law_par, &law_perp, &wedge_par, &wedge_perp, &closure})
    report.records.push_back(t->record());
}

// -------------------------------------------------------------------- metric

void run_metric(const SuiteConfig& cfg, Report& report) {
  Rng rng(cfg.seed);
  const Signature sig = cfg.signature.p > 0 ? cfg.signature : kSta;
  Tally decomposition("metric_split_reconstructs_g", "h = g - n(x)n");
  Tally kernel("metric_split_kernel", "h annihilates the raised splitter");
  Tally symmetry("metric_split_symmetry", "h is symmetric");
  Tally bilinear("metric_split_bilinear_agreement", "g_par(u,v) = g(u,v) - (u.n)(v.n)");

  for (long t = 0; t < cfg.trials; ++t) {
    Multivector<Rational> n = rng.unit_vector(sig);
    auto w = [&] { return "n = " + to_text(n); };
    auto ms = metric_split(n);
    bool recon = true, sym = true;
    for (int mu = 0; mu < sig.dim(); ++mu)
      for (int nu = 0; nu < sig.dim(); ++nu) {
        Rational g_mn = mu == nu ? Rational(sig.metric_sign(mu)) : Rational(0);
        recon = recon && ms.h[mu][nu] + ms.g_perp[mu][nu] == g_mn;
        sym = sym && ms.h[mu][nu] == ms.h[nu][mu];
      }
    decomposition.note(recon, w);
    symmetry.note(sym, w);
    bool ker = true;
    for (const Rational& c : metric_split_kernel(ms, n)) ker = ker && c.is_zero();
    kernel.note(ker, w);

    Multivector<Rational> u = grade_projection(rng.multivector(sig), 1);
    Multivector<Rational> v = grade_projection(rng.multivector(sig), 1);
    Rational lhs = extended_metric(u, v) - extended_metric(u, n) * extended_metric(v, n);
    Rational rhs = 0;
    for (int mu = 0; mu < sig.dim(); ++mu)
      for (int nu = 0; nu < sig.dim(); ++nu)
        rhs += ms.h[mu][nu] * u.coefficient(Blade(1u << mu)) * v.coefficient(Blade(1u << nu));
    bilinear.note(lhs == rhs, w);
  }
  for (const Tally* t : {&decomposition, &kernel, &symmetry, &bilinear})
    report.records.push_back(t->record());
}

// --------------------------------------------------------------------- hodge

void run_hodge(const SuiteConfig& cfg, Report& report) {
  Rng rng(cfg.seed);
  const Signature sig = cfg.signature.p > 0 ? cfg.signature : kSta;
  Tally orientation("orientation_invariants", "tau = n eta, eta = n ^ tau, n tau = hat(tau) n");
  Tally complement("star_grade_complement", "the star lands in the complementary grade");
  Tally inverse_id("star_inverse_identity", "beta star undoes the star");
  Tally dual_par("dual_star_stays_parallel", "the dual star preserves the even part");
  Tally dual_inv("dual_star_inverse", "grade signs undo the dual star");
  Tally split_ids("star_splitting_identities", "projected star against the dual star");

  for (long t = 0; t < cfg.trials; ++t) {
    Multivector<Rational> n = rng.unit_vector(sig);
    if (!(n * n == Multivector<Rational>::scalar(sig, 1))) continue;  // needs a timelike splitter
    auto o = Orientation<Rational>::from_unit_vector(n);
    auto g = Grading<Rational>::vector(n);
    Multivector<Rational> psi = rng.multivector(sig);
    auto w = [&] { return "n = " + to_text(n) + "; psi = " + to_text(psi); };

    orientation.note(o.tau == n * o.eta && wedge(n, o.tau) == o.eta &&
                         n * o.tau == grade_involution(o.tau) * n &&
                         grade_involution(o.eta) == -(o.tau * n) &&
                         g.project(o.tau).orthogonal.is_zero(),
                     w);
    bool comp = true;
    for (int k = 0; k <= sig.dim(); ++k) {
      Multivector<Rational> part = grade_projection(psi, k);
      if (part.is_zero()) continue;
      Multivector<Rational> s = hodge_star(part, o);
      comp = comp && (s.is_zero() || s.grade() == sig.dim() - k);
    }
    complement.note(comp, w);
    inverse_id.note(hodge_inverse(hodge_star(psi, o), o) == psi &&
                        hodge_star(hodge_inverse(psi, o), o) == psi,
                    w);
    Multivector<Rational> par = g.project(psi).parallel;
    Multivector<Rational> dual = parallel_hodge(par, o);
    dual_par.note(g.project(dual).orthogonal.is_zero(), w);
    dual_inv.note(parallel_hodge_inverse(dual, o) == par, w);
    bool ids = true;
    for (const auto& r : hodge_split_identities(psi, o)) ids = ids && r.holds();
    split_ids.note(ids, w);
  }
  for (const Tally* t : {&orientation, &complement, &inverse_id, &dual_par, &dual_inv, &split_ids})
    report.records.push_back(t->record());

  std::ostringstream signs;
  for (int k = 0; k <= sig.dim() - 1; ++k)
    signs << (k ? "," : "") << dhso_double_sign(sig, k);
  info_record(report, "dual_star_double_sign_by_grade", "square of the dual star", CheckStatus::pass,
              signs.str(), sig_text(sig));
}

// ------------------------------------------------------------------ calculus

void run_calculus(const SuiteConfig& cfg, Report& report) {
  Rng rng(cfg.seed);
  std::vector<SplittingField> fields;
  fields.push_back(SplittingField::constant(parse_multivector("e0", kSta)));
  fields.push_back(SplittingField::constant(parse_multivector("5/4*e0 + 3/4*e1", kSta)));
  fields.push_back(SplittingField::rational_boost(kSta, 1, 1));
  const std::array<const char*, 3> family{"constant e0", "constant boosted", "rational boost"};

  Tally dd("differential_squares_to_zero", "d d = 0");
  Tally deldel("codifferential_squares_to_zero", "delta delta = 0");
  Tally dirac_routes("dirac_operator_two_routes", "wedge+contraction route equals the product route");
  Tally lie_comm("lie_derivative_commutes_with_d", "lie_n d = d lie_n");
  Tally omega_grade("connection_bivector", "Omega_mu is grade 2 and returns d_mu n");
  Tally comm_proj("commutator_projection_rules", "half-commutators flip the projection");
  Tally cov_par("covariant_derivative_parallel", "D_mu keeps parallel fields parallel");
  Tally split_rules("split_differential_rules", "d_perp psi_perp = 0 and the lie form of d_perp");
  Tally decoi("orthogonal_differential_covariant_form", "(d psi_perp)_perp via covariant data");
  Tally lie_dpar("lie_vs_parallel_differential", "the commutator defect is the acceleration term");
  Tally cod_par("parallel_codifferential_identity", "dual-star form of the parallel codifferential");
  Tally frob("frobenius_families", "n ^ dn on the built-in families");

  const long per_family = std::max(1L, cfg.trials / 3);
  for (std::size_t f = 0; f < fields.size(); ++f) {
    const SplittingField& s = fields[f];
    // The non-constant family is the expensive one; trim its polynomial size.
    int deg = f == 2 ? std::min(cfg.degree, 2) : cfg.degree;
    for (long t = 0; t < per_family; ++t) {
      FieldMv psi = rng.field(kSta, deg, 2);
      auto w = [&] { return std::string(family[f]) + "; psi = " + to_text(psi); };

      dd.note(differential(differential(psi)).is_zero(), w);
      deldel.note(codifferential(codifferential(psi)).is_zero(), w);
      bool ok = true;
      try {
        (void)dirac(psi);  // the two routes are compared inside
      } catch (const Error&) {
        ok = false;
      }
      dirac_routes.note(ok, w);
      lie_comm.note(lie_derivative(s.n(), differential(psi)) ==
                        differential(lie_derivative(s.n(), psi)),
                    w);

      bool omega_ok = true;
      try {
        auto ws = omega(s);  // validates grade and the derivative identity
        for (int mu = 0; mu < 4; ++mu)
          omega_ok = omega_ok && ws[std::size_t(mu)] == grade_projection(ws[std::size_t(mu)], 2);
      } catch (const Error&) {
        omega_ok = false;
      }
      omega_grade.note(omega_ok, w);

      auto cpr = commutator_projection_identities(s, psi);
      bool cp_ok = true;
      for (int mu = 0; mu < 4; ++mu)
        cp_ok = cp_ok && cpr.parallel_rule[std::size_t(mu)].is_zero() &&
                cpr.orthogonal_rule[std::size_t(mu)].is_zero() &&
                cpr.parallel_projection[std::size_t(mu)].is_zero();
      comm_proj.note(cp_ok, w);

      FieldMv par = s.project(psi).parallel;
      bool cov_ok = true;
      try {
        for (int mu = 0; mu < 4; ++mu) (void)covariant_parallel(s, mu, par);
      } catch (const Error&) {
        cov_ok = false;
      }
      cov_par.note(cov_ok, w);

      bool deep = t % 4 == 0;
      auto sd = split_differential(s, psi, deep);
      split_rules.note(sd.d_perp_of_perp.is_zero() && sd.perp_rule_residual.is_zero(), w);

      auto lc = lie_d_parallel_commutator(s, psi);
      bool lie_ok = lc.residual.is_zero();
      if (f != 2) lie_ok = lie_ok && lc.commutes && lc.commutator_defect.is_zero();
      if (f == 2) lie_ok = lie_ok && !lc.commutes;
      lie_dpar.note(lie_ok, w);

      // The identities below run through the dual-star pipeline and the
      // covariant-route rewrite; they carry most of the gcd cost, so they are
      // sampled instead of run on every draw.
      if (deep) {
        decoi.note(sd.decoi_residual.is_zero() && sd.covariant_route_residual.is_zero(), w);
        auto cp = codifferential_parallel_identity(s, par);
        cod_par.note(cp.final_residual.is_zero() && cp.component_residual.is_zero(), w);
      }
    }
    frob.note(frobenius_check(s.n()), [&] { return std::string(family[f]); });
  }
  for (const Tally* t : {&dd, &deldel, &dirac_routes, &lie_comm, &omega_grade, &comm_proj, &cov_par,
                         &split_rules, &decoi, &lie_dpar, &cod_par, &frob})
    report.records.push_back(t->record());

  FieldMv twisted = lift_to_field(parse_multivector("e0", kSta)) +
                    lift_to_field(parse_multivector("e1", kSta))
                        .scaled(RationalFunction::variable(2, 4));
  info_record(report, "frobenius_twisted_example", "a non-integrable direction field",
              CheckStatus::pass, frobenius_check(twisted) ? "integrable" : "not integrable",
              "n = e0 + x2 e1");
}

// ---------------------------------------------------------------------- dual

// Sign fit of `formula` against `operator_route`, component by component.
struct ComponentFit {
  bool defined = false;
  bool consistent = true;
  int sign = 0;  // +1, -1; 0 while undefined
  void absorb(const FieldMv& op, const FieldMv& formula) {
    if (op.is_zero() && formula.is_zero()) return;
    int s = 0;
    if (op == formula) s = +1;
    else if (op == -formula) s = -1;
    else {
      consistent = false;
      return;
    }
    if (!defined) {
      defined = true;
      sign = s;
    } else if (sign != s) {
      consistent = false;
    }
  }
  std::string text() const {
    if (!consistent) return "no single sign relates the routes";
    if (!defined) return "both routes vanish on the sample family";
    return sign > 0 ? "formula equals the operator route" : "formula is the negative of the operator route";
  }
};

void run_dual(const SuiteConfig& cfg, Report& report) {
  Rng rng(cfg.seed);

  // Exhaustive blade sweep of the two equivalent automorphism forms.
  Tally dectau("dual_grading_equivalence", "splitter form equals the volume-element form");
  long literal_misses = 0, literal_total = 0;
  for (int i = 0; i < 5; ++i) {
    Multivector<Rational> n = i == 0 ? parse_multivector("e0", kSta) : rng.unit_vector(kSta);
    auto o = Orientation<Rational>::from_unit_vector(n);
    auto g = Grading<Rational>::vector(n);
    for (Blade b = 0; b < kSta.blade_count(); ++b) {
      Multivector<Rational> psi = Multivector<Rational>::blade(kSta, b);
      dectau.note(dual_alpha(psi, o) == g.alpha(psi),
                  [&] { return "n = " + to_text(n) + "; psi = " + blade_name(b); });
      ++literal_total;
      if (!(dual_alpha_literal(psi, o) == g.alpha(psi))) ++literal_misses;
    }
  }
  report.records.push_back(dectau.record());
  {
    std::ostringstream os;
    os << literal_misses << " of " << literal_total
       << " basis blades disagree; the grade involution restores equality on all of them";
    info_record(report, "dual_grading_literal_exponent", "printed exponent without the hat",
                literal_misses == 0 ? CheckStatus::pass : CheckStatus::paper_mismatch, os.str(),
                "all odd grades in Cl(1,3)");
  }

  std::vector<SplittingField> fields;
  fields.push_back(SplittingField::constant(parse_multivector("e0", kSta)));
  fields.push_back(SplittingField::rational_boost(kSta, 1, 1));
  const std::array<const char*, 2> family{"constant e0", "rational boost"};

  Tally dirac_equal("dual_dirac_routes_equal", "both automorphism forms share the Dirac image");
  std::array<std::array<std::array<ComponentFit, 2>, 5>, 5> fits{};  // [identity][grade][component]
  const std::array<const char*, 5> idname = {"111", "112", "113", "114", "mussa"};

  const long sweep = std::max(4L, cfg.trials / 5);
  for (long t = 0; t < sweep; ++t) {
    const std::size_t f = std::size_t(t % 2);
    const SplittingField& s = fields[f];
    int grade = int(rng.range(0, 4));
    FieldMv psi = rng.homogeneous_field(kSta, grade, f == 1 ? 1 : 2, 2);
    auto sample = dual_decomposition_operators(s, psi);
    dirac_equal.note(sample.alpha_n == sample.alpha_tau &&
                         sample.dirac_op == differential(sample.alpha_tau) -
                                                codifferential(sample.alpha_tau),
                     [&] { return std::string(family[f]) + "; psi = " + to_text(psi); });

    const std::array<const FieldMv*, 5> formula{&sample.f111, &sample.f112, &sample.f113,
                                                &sample.f114, &sample.f_mussa};
    const FieldMv* op_for[5] = {&sample.d_op, &sample.d_op, &sample.delta_op, &sample.delta_op,
                                &sample.dirac_op};
    for (int id = 0; id < 5; ++id) {
      auto op_parts = s.project(*op_for[id]);
      auto f_parts = s.project(*formula[std::size_t(id)]);
      fits[std::size_t(id)][std::size_t(grade)][0].absorb(op_parts.parallel, f_parts.parallel);
      fits[std::size_t(id)][std::size_t(grade)][1].absorb(op_parts.orthogonal, f_parts.orthogonal);
    }
  }
  report.records.push_back(dirac_equal.record());
  for (int id = 0; id < 5; ++id) {
    for (int grade = 0; grade <= 4; ++grade) {
      std::ostringstream os;
      const auto& par = fits[std::size_t(id)][std::size_t(grade)][0];
      const auto& perp = fits[std::size_t(id)][std::size_t(grade)][1];
      os << "parallel: " << par.text() << "; orthogonal: " << perp.text();
      bool clean = par.consistent && perp.consistent && (!par.defined || par.sign == 1) &&
                   (!perp.defined || perp.sign == 1);
      info_record(report,
                  std::string("dual_formula_") + idname[std::size_t(id)] + "_grade" +
                      std::to_string(grade),
                  "closed derivative formulas of the dual decomposition",
                  clean ? CheckStatus::pass : CheckStatus::paper_mismatch, os.str(),
                  "sign ledger entry");
    }
  }

  // Collapsed Minkowski expression: on time-dependent parallel fields over the
  // constant splitter the bracket reproduces the operator route with +1.
  Tally zaka_family("dual_zaka_family_constant", "collapsed Minkowski expression, restricted family");
  const SplittingField& c = fields[0];
  bool general_const = true;
  std::string general_note;
  for (long t = 0; t < sweep; ++t) {
    int grade = int(rng.range(0, 3));
    FieldMv par(kSta);
    for (Blade b = 0; b < kSta.blade_count(); ++b) {
      if ((b & 1u) != 0 || grade_of(b) != grade) continue;
      Polynomial x0 = Polynomial::variable(0, 4);
      Polynomial p(4);
      for (long e = 0; e <= 2; ++e) p += x0.pow(unsigned(e)).scaled(rng.rational_or_zero());
      par.add_term(b, RationalFunction(p));
    }
    if (par.is_zero()) par = lift_to_field(parse_multivector("e123", kSta));
    auto sample = dual_decomposition_operators(c, par);
    zaka_family.note(sample.dirac_op == sample.zaka_bracket,
                     [&] { return "psi = " + to_text(par); });

    FieldMv general = rng.homogeneous_field(kSta, int(rng.range(0, 4)), 2, 2);
    auto gs = dual_decomposition_operators(c, general);
    if (!(gs.dirac_op == gs.f_zaka) && general_note.empty()) {
      general_const = false;
      general_note = "psi = " + to_text(general);
    }
  }
  {
    CheckRecord r = zaka_family.record();
    r.residual += "; verified constant +1 in front of the bracket (the stated -2 is not reproduced)";
    report.records.push_back(r);
  }
  info_record(report, "dual_zaka_general", "collapsed Minkowski expression, general fields",
              general_const ? CheckStatus::pass : CheckStatus::paper_mismatch,
              general_const ? "holds as stated"
                            : "the printed right-hand side misses the contraction terms; no "
                              "constant rescaling repairs it",
              general_note);
}

// --------------------------------------------------------------------- dirac

void run_dirac(const SuiteConfig& cfg, Report& report) {
  Rng rng(cfg.seed);
  std::vector<AdaptedBasis> frames;
  frames.push_back(AdaptedBasis::standard());
  frames.push_back(AdaptedBasis::from_versor(Versor<Rational>(parse_multivector("5/4 + 3/4*e01", kSta))));
  frames.push_back(AdaptedBasis::from_versor(Versor<Rational>(parse_multivector("3/5 + 4/5*e12", kSta))));
  const std::array<const char*, 3> family{"standard", "boosted", "rotated"};

  Tally structure("double_quaternion_structure", "two quaternion ideals in the even part");
  Tally basis_ok("parallel_basis_closure", "the eight even generators close");
  for (std::size_t f = 0; f < frames.size(); ++f) {
    bool ok = true;
    try {
      (void)parallel_subalgebra_basis(frames[f]);
    } catch (const Error&) {
      ok = false;
    }
    basis_ok.note(ok, [&] { return std::string(family[f]); });
    bool all = true;
    for (const auto& check : quaternion_isomorphism_check(frames[f])) all = all && check.ok;
    structure.note(all, [&] { return std::string(family[f]); });
  }
  report.records.push_back(basis_ok.record());
  report.records.push_back(structure.record());

  Tally even("spinor_realizations_alpha_even", "spinors land in the even part");
  Tally round_trip("spinor_coefficient_round_trip", "realize then extract is the identity");
  Tally sigma_ok("sigma_admissibility", "sigma^2 = -1 and [n, sigma] = 0");
  Tally relation("dirac_two_route_relation", "split equation equals the general one after n sigma");

  for (long t = 0; t < cfg.trials; ++t) {
    const AdaptedBasis& frame = frames[std::size_t(t % 3)];
    SplittingField s = frame.splitting();
    Multivector<Rational> sigma =
        t % 2 == 0 ? make_sigma(Rational(3, 5), Rational(4, 5), 0, frame)
                   : make_sigma(0, 0, 1, frame);
    sigma_ok.note(sigma_validate(sigma, frame) &&
                  !sigma_validate(make_sigma(1, 1, 0, frame), frame));

    SpinorCoefficients<Rational> k{rng.rational_or_zero(), rng.rational_or_zero(),
                                   rng.rational_or_zero(), rng.rational_or_zero(),
                                   rng.rational_or_zero(), rng.rational_or_zero(),
                                   rng.rational_or_zero(), rng.rational_or_zero()};
    Multivector<Rational> psi0 = make_spinor(k, frame);
    auto g = Grading<Rational>::vector(frame.n(0));
    even.note(g.project(psi0).orthogonal.is_zero(),
              [&] { return std::string(family[t % 3]) + "; psi = " + to_text(psi0); });
    auto back = extract_spinor(psi0, frame);
    round_trip.note(back.a == k.a && back.b12 == k.b12 && back.b23 == k.b23 && back.b31 == k.b31 &&
                        back.c == k.c && back.d12 == k.d12 && back.d23 == k.d23 &&
                        back.d31 == k.d31,
                    [&] { return to_text(psi0); });

    FieldMv psi = s.project(rng.field(kSta, 2, 2)).parallel;
    auto r = general_dirac_residual(psi, sigma, frame, Rational(3, 2));
    relation.note(r.relation.is_zero(),
                  [&] { return std::string(family[t % 3]) + "; psi = " + to_text(psi); });
  }
  for (const Tally* t : {&even, &round_trip, &sigma_ok, &relation})
    report.records.push_back(t->record());
}

}  // namespace

bool suite_known(const std::string& name) {
  for (const char* s : {"projectors", "products", "metric", "hodge", "calculus", "dual", "dirac", "all"})
    if (name == s) return true;
  return false;
}

Report run_suite(const SuiteConfig& config) {
  Report report;
  report.suite = config.suite;
  report.signature = config.signature;
  report.seed = config.seed;
  report.trials = config.trials;
  report.degree = config.degree;
  if (config.suite == "projectors" || config.suite == "all") run_projectors(config, report);
  if (config.suite == "products" || config.suite == "all") run_products(config, report);
  if (config.suite == "metric" || config.suite == "all") run_metric(config, report);
  if (config.suite == "hodge" || config.suite == "all") run_hodge(config, report);
  if (config.suite == "calculus" || config.suite == "all") run_calculus(config, report);
  if (config.suite == "dual" || config.suite == "all") run_dual(config, report);
  if (config.suite == "dirac" || config.suite == "all") run_dirac(config, report);
  return report;
}

}  // namespace ga
