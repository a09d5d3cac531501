#pragma once

#include <vector>

#include "ga/multivector.hpp"

namespace ga {

enum class SplitterKind { vector_n, k_form, general, graded_involution };

// Whether the sandwich applies the grade involution to its argument:
// hat_sandwich is alpha(psi) = phi psihat phi^-1 (the spacetime splitting),
// plain_sandwich is alpha(psi) = phi psi phi^-1 (the k-vectorial tables).
enum class SignMode { hat_sandwich, plain_sandwich };

template <class S>
struct SplitParts {
  Multivector<S> parallel;
  Multivector<S> orthogonal;
};

// A Z2-splitting datum: an invertible multivector phi together with the
// sandwich mode. The induced alpha must be involutive for the projectors to
// make sense; that is equivalent to phi*phihat (hat mode) or phi*phi (plain
// mode) being central, which is checked once at construction.
template <class S>
class Grading {
 public:
  static Grading vector(const Multivector<S>& n) {
    if (n.is_zero() || !n.is_homogeneous() || n.grade() != 1)
      fail(ErrorCode::NotUnitNorm, "splitter must be a nonzero 1-form");
    return Grading(n, SplitterKind::vector_n, SignMode::hat_sandwich);
  }
  static Grading k_form(const Multivector<S>& phi) {
    if (phi.is_zero() || !phi.is_homogeneous())
      fail(ErrorCode::NotInvertible, "splitter must be a nonzero homogeneous k-form");
    return Grading(phi, SplitterKind::k_form, SignMode::plain_sandwich);
  }
  static Grading general(const Multivector<S>& phi, SignMode mode) {
    return Grading(phi, SplitterKind::general, mode);
  }
  static Grading graded_involution(Signature sig) {
    Grading g(Multivector<S>::scalar(sig, ScalarOps<S>::one(sig.dim())), SplitterKind::graded_involution,
              SignMode::hat_sandwich);
    return g;
  }

  const Multivector<S>& splitter() const { return phi_; }
  SplitterKind kind() const { return kind_; }
  SignMode sign_mode() const { return mode_; }
  bool involutive() const { return involutive_; }

  Multivector<S> alpha(const Multivector<S>& psi) const {
    if (kind_ == SplitterKind::graded_involution) return grade_involution(psi);
    const Multivector<S>& arg_base = psi;
    Multivector<S> arg = mode_ == SignMode::hat_sandwich ? grade_involution(arg_base) : arg_base;
    return phi_ * arg * phi_inv_;
  }

  SplitParts<S> project(const Multivector<S>& psi) const {
    if (!involutive_) fail(ErrorCode::NotInvolutive, "alpha is not an involution for this splitter");
    Multivector<S> a = alpha(psi);
    return {(psi + a).halved(), (psi - a).halved()};
  }

 private:
  Grading(const Multivector<S>& phi, SplitterKind kind, SignMode mode)
      : phi_(phi), phi_inv_(phi.signature()), kind_(kind), mode_(mode) {
    if (kind_ != SplitterKind::graded_involution) {
      phi_inv_ = inverse(phi_);
      Multivector<S> c =
          mode_ == SignMode::hat_sandwich ? phi_ * grade_involution(phi_) : phi_ * phi_;
      involutive_ = is_central(c);
    }
  }

  bool is_central(const Multivector<S>& c) const {
    for (int mu = 0; mu < c.signature().dim(); ++mu) {
      Multivector<S> e = Multivector<S>::basis_vector(c.signature(), mu);
      if (!(c * e == e * c)) return false;
    }
    return true;
  }

  Multivector<S> phi_;
  Multivector<S> phi_inv_;
  SplitterKind kind_;
  SignMode mode_;
  bool involutive_ = true;
};

// Scalar square of a grade-1 element; NotUnitNorm unless it is +1 or -1.
template <class S>
int unit_square_sign(const Multivector<S>& n) {
  Multivector<S> sq = n * n;
  if (!sq.is_scalar()) fail(ErrorCode::NotUnitNorm, "square of splitter is not scalar");
  S s = sq.scalar_part();
  const int w = n.signature().dim();
  if ((s - ScalarOps<S>::one(w)).is_zero()) return +1;
  if ((s + ScalarOps<S>::one(w)).is_zero()) return -1;
  fail(ErrorCode::NotUnitNorm, "splitter does not have unit square");
}

// Contraction form of the projectors, pi_par = n.(n^psi), pi_perp = n^(n.psi),
// normalized by n^2 so the pair also covers unit splitters of negative square.
template <class S>
SplitParts<S> project_contraction_form(const Multivector<S>& n, const Multivector<S>& psi) {
  if (n.is_zero() || !n.is_homogeneous() || n.grade() != 1)
    fail(ErrorCode::NotUnitNorm, "splitter must be a nonzero 1-form");
  int s = unit_square_sign(n);
  Multivector<S> par = lcontract(n, wedge(n, psi));
  Multivector<S> perp = wedge(n, lcontract(n, psi));
  if (s < 0) return {-par, -perp};
  return {par, perp};
}

// Residuals of the product-splitting laws; all must be zero.
template <class S>
struct ProductSplitResiduals {
  Multivector<S> product_parallel;    // (phi psi)_par - (phi_par psi_par + phi_perp psi_perp)
  Multivector<S> product_orthogonal;  // (phi psi)_perp - (phi_par psi_perp + phi_perp psi_par)
  Multivector<S> wedge_parallel;      // (v ^ phi)_par - v_par ^ phi_par
  Multivector<S> wedge_orthogonal;    // (v ^ phi)_perp - (v_perp ^ phi_par + v_par ^ phi_perp)
};

template <class S>
ProductSplitResiduals<S> split_product_laws(const Grading<S>& g, const Multivector<S>& v,
                                            const Multivector<S>& phi) {
  auto pv = g.project(v);
  auto pphi = g.project(phi);
  auto pprod = g.project(v * phi);
  ProductSplitResiduals<S> r{
      pprod.parallel - (pv.parallel * pphi.parallel + pv.orthogonal * pphi.orthogonal),
      pprod.orthogonal - (pv.parallel * pphi.orthogonal + pv.orthogonal * pphi.parallel),
      Multivector<S>(g.splitter().signature()), Multivector<S>(g.splitter().signature())};
  Multivector<S> v1 = grade_projection(v, 1);
  auto pv1 = g.project(v1);
  auto pw = g.project(wedge(v1, phi));
  r.wedge_parallel = pw.parallel - wedge(pv1.parallel, pphi.parallel);
  r.wedge_orthogonal = pw.orthogonal - (wedge(pv1.orthogonal, pphi.parallel) +
                                        wedge(pv1.parallel, pphi.orthogonal));
  return r;
}

// Spatial metric h = g - n (x) n and its rank-one complement, as component
// matrices with lowered indices.
template <class S>
struct MetricSplit {
  std::vector<std::vector<S>> h;
  std::vector<std::vector<S>> g_perp;
};

template <class S>
MetricSplit<S> metric_split(const Multivector<S>& n) {
  if (unit_square_sign(n) != 1) fail(ErrorCode::NotUnitNorm, "splitter must square to +1");
  const Signature sig = n.signature();
  const int d = sig.dim();
  const int w = d;
  std::vector<S> lowered(d, ScalarOps<S>::zero(w));
  for (int mu = 0; mu < d; ++mu) {
    S c = n.coefficient(Blade(1u << mu));
    lowered[mu] = sig.metric_sign(mu) < 0 ? -c : c;
  }
  MetricSplit<S> ms{std::vector<std::vector<S>>(d, std::vector<S>(d, ScalarOps<S>::zero(w))),
                    std::vector<std::vector<S>>(d, std::vector<S>(d, ScalarOps<S>::zero(w)))};
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      ms.g_perp[mu][nu] = lowered[mu] * lowered[nu];
      S g_mn = ScalarOps<S>::from_int(mu == nu ? sig.metric_sign(mu) : 0, w);
      ms.h[mu][nu] = g_mn - ms.g_perp[mu][nu];
    }
  }
  return ms;
}

// Components of h . n# (raised index contraction); zero iff n is in the
// kernel of the spatial metric.
template <class S>
std::vector<S> metric_split_kernel(const MetricSplit<S>& ms, const Multivector<S>& n) {
  const Signature sig = n.signature();
  const int d = sig.dim();
  std::vector<S> out(d, ScalarOps<S>::zero(d));
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu) out[mu] += ms.h[mu][nu] * n.coefficient(Blade(1u << nu));
  return out;
}

// Even product of unit 1-forms acting by the sandwich v -> L v ~L.
template <class S>
class Versor {
 public:
  explicit Versor(const Multivector<S>& l) : l_(l), l_rev_(reversion(l)) {
    for (const auto& [b, c] : l.terms())
      if (grade_of(b) % 2 != 0) fail(ErrorCode::NotVersor, "versor must be even");
    if (!is_unit_scalar(l_ * l_rev_)) fail(ErrorCode::NotVersor, "L ~L must be 1");
    for (int mu = 0; mu < l.signature().dim(); ++mu) {
      Multivector<S> img = sandwich(Multivector<S>::basis_vector(l.signature(), mu));
      if (!img.is_homogeneous() || (!img.is_zero() && img.grade() != 1))
        fail(ErrorCode::NotVersor, "sandwich does not preserve grade 1");
    }
  }

  static Versor identity(Signature sig) {
    return Versor(Multivector<S>::scalar(sig, ScalarOps<S>::one(sig.dim())));
  }

  const Multivector<S>& element() const { return l_; }
  Multivector<S> sandwich(const Multivector<S>& v) const { return l_ * v * l_rev_; }

 private:
  Multivector<S> l_;
  Multivector<S> l_rev_;
};

// Frame adapted to the observer: { L e^mu ~L }, with the image of e^0 a unit
// timelike 1-form orthogonal to the spatial images.
template <class S>
std::vector<Multivector<S>> adapted_frame(const Versor<S>& l) {
  const Signature sig = l.element().signature();
  std::vector<Multivector<S>> frame;
  frame.reserve(std::size_t(sig.dim()));
  for (int mu = 0; mu < sig.dim(); ++mu)
    frame.push_back(l.sandwich(Multivector<S>::basis_vector(sig, mu)));
  if (unit_square_sign(frame[0]) != 1) fail(ErrorCode::NotVersor, "frame head is not unit timelike");
  for (int i = 1; i < sig.dim(); ++i)
    if (!extended_metric(frame[0], frame[std::size_t(i)]).is_zero())
      fail(ErrorCode::NotVersor, "frame is not orthogonal to its head");
  return frame;
}

}  // namespace ga
