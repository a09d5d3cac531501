#pragma once

#include <vector>

#include "ga/hodge.hpp"

namespace ga {

using FieldMv = Multivector<RationalFunction>;

// Index-raised coordinate coframe gamma^mu = g^{mu mu} e^mu as a constant field.
FieldMv coframe_raised(Signature sig, int mu);

FieldMv field_partial(const FieldMv& psi, int mu);

// d = gamma^mu ^ d_mu
FieldMv differential(const FieldMv& psi);
// delta = -gamma^mu . d_mu
FieldMv codifferential(const FieldMv& psi);
// Dirac operator d - delta; cross-checked against gamma^mu (d_mu psi).
FieldMv dirac(const FieldMv& psi);

// Grade-1 field with n^2 = 1 as an exact ring identity, so n^-1 = n. The
// connection components Omega_mu = n d_mu n are computed and validated once
// at construction.
class SplittingField {
 public:
  explicit SplittingField(FieldMv n);

  static SplittingField constant(const Multivector<Rational>& n);
  // n = ((1+t^2) e^0 + 2t e^axis) / (1-t^2) with t the coordinate x_var.
  static SplittingField rational_boost(Signature sig, int axis, int var);

  const FieldMv& n() const { return n_; }
  Signature signature() const { return n_.signature(); }
  // Raised component n^mu (the e^mu coefficient).
  RationalFunction component(int mu) const { return n_.coefficient(Blade(1u << mu)); }

  FieldMv alpha(const FieldMv& psi) const;
  SplitParts<RationalFunction> project(const FieldMv& psi) const;
  FieldMv gamma_parallel(int mu) const;  // gamma^mu - n n^mu
  FieldMv gamma_orthogonal(int mu) const;
  const std::vector<FieldMv>& connection() const { return omega_; }

 private:
  FieldMv n_;
  std::vector<FieldMv> omega_;
};

// Omega_mu = n d_mu n; exactly grade 2, with n . d_mu n = 0 and
// d_mu n = -1/2 [Omega_mu, n].
std::vector<FieldMv> omega(const SplittingField& s);
FieldMv omega_contracted(const SplittingField& s);  // Omega(n) = n^mu Omega_mu

FieldMv commutator_half(const FieldMv& a, const FieldMv& b);  // 1/2 [a, b]

struct CommutatorProjectionResiduals {
  // per coordinate: 1/2[Omega_mu, psi_par] + (d_mu psi_par)_perp
  std::vector<FieldMv> parallel_rule;
  // per coordinate: 1/2[Omega_mu, psi_perp] + (d_mu psi_perp)_par
  std::vector<FieldMv> orthogonal_rule;
  // per coordinate: (d_mu psi_par)_par - (d_mu psi_par + 1/2[Omega_mu, psi_par])
  std::vector<FieldMv> parallel_projection;
};
CommutatorProjectionResiduals commutator_projection_identities(const SplittingField& s,
                                                               const FieldMv& psi);

// Cartan form n . d psi + d(n . psi).
FieldMv lie_derivative(const FieldMv& n, const FieldMv& psi);

// D^par_mu psi_par = d_mu psi_par + 1/2 [Omega_mu, psi_par]; preserves the
// parallel subspace.
FieldMv covariant_parallel(const SplittingField& s, int mu, const FieldMv& psi_par);

struct SplitDifferential {
  FieldMv d_par_of_par;    // (d psi_par)_par
  FieldMv d_perp_of_par;   // (d psi_par)_perp
  FieldMv d_par_of_perp;   // (d psi_perp)_perp
  FieldMv d_perp_of_perp;  // (d psi_perp)_par, identically zero
  FieldMv perp_rule_residual;   // d_perp psi_par - n ^ lie_n psi_par
  FieldMv decoi_residual;       // (d psi_perp)_perp against its covariant form
  FieldMv covariant_route_residual;  // d_par psi_par - gamma_par^mu ^ D_mu psi_par
};
// with_covariant_forms = false skips the two covariant-route residuals (their
// fields stay zero); everything else is always computed.
SplitDifferential split_differential(const SplittingField& s, const FieldMv& psi,
                                     bool with_covariant_forms = true);

struct LieCommutatorReport {
  FieldMv residual;  // lie_n(d_par psi) - d_par(lie_n psi) + lie_n n ^ (n . d psi)
  FieldMv lie_n_of_n;
  bool commutes;  // lie_n n == 0
  FieldMv commutator_defect;  // lie_n(d_par psi) - d_par(lie_n psi)
};
LieCommutatorReport lie_d_parallel_commutator(const SplittingField& s, const FieldMv& psi);

struct CodifferentialParallelReport {
  // (d . psi_par)_par + dual^-1 d_par dual psihat_par + (lie_n n) . psi_par
  FieldMv final_residual;
  // (d . psi_par)_par - gamma_par^mu . D_mu psi_par + n . (1/2[Omega(n), psi_par])
  FieldMv component_residual;
};
CodifferentialParallelReport codifferential_parallel_identity(const SplittingField& s,
                                                              const FieldMv& psi_par);

// Everything needed to compare the operator route d/delta/dirac of both
// splitting automorphisms against the closed formulas, one homogeneous input
// at a time.
struct DualOperatorSample {
  int grade = 0;
  FieldMv alpha_n, alpha_tau;
  FieldMv d_op, delta_op, dirac_op;
  FieldMv f111, f112, f113, f114, f_mussa;
  FieldMv zaka_bracket;  // (-1)^k n (d psi) n^-1 + n psi (d n^-1)
  FieldMv f_zaka;        // -2 zaka_bracket
};
DualOperatorSample dual_decomposition_operators(const SplittingField& s, const FieldMv& psi);

bool frobenius_check(const FieldMv& n);

// pi_par(dirac) psi and pi_perp(dirac) psi by splitting the coframe.
struct ProjectedDirac {
  FieldMv parallel;
  FieldMv orthogonal;
};
ProjectedDirac projected_dirac_operator(const SplittingField& s, const FieldMv& psi);

}  // namespace ga
