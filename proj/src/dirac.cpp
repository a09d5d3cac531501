#include "ga/dirac.hpp"

namespace ga {

namespace {

const Signature kSta(1, 3);

using Mv = Multivector<Rational>;

// Solves A x = rhs for the column x over the rationals; empty on failure.
std::vector<Rational> solve_columns(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
                                    std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_of_col(cols, rows);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    std::swap(rhs[p], rhs[row]);
    Rational inv = Rational(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    rhs[row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (!rhs[i].is_zero()) return {};
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] < rows) x[col] = rhs[pivot_of_col[col]];
  return x;
}

std::vector<Rational> blade_column(const Mv& m) {
  std::vector<Rational> v(kSta.blade_count(), Rational(0));
  for (const auto& [b, c] : m.terms()) v[b] = c;
  return v;
}

// Coordinates of `target` in the span of `basis`; empty when outside.
std::vector<Rational> expand_in(const std::vector<Mv>& basis, const Mv& target) {
  std::vector<std::vector<Rational>> m(kSta.blade_count(),
                                       std::vector<Rational>(basis.size(), Rational(0)));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [b, c] : basis[j].terms()) m[b][j] = c;
  }
  return solve_columns(std::move(m), blade_column(target), basis.size());
}

std::size_t span_rank(const std::vector<Mv>& vecs) {
  std::vector<std::vector<Rational>> m(kSta.blade_count(),
                                       std::vector<Rational>(vecs.size(), Rational(0)));
  for (std::size_t j = 0; j < vecs.size(); ++j)
    for (const auto& [b, c] : vecs[j].terms()) m[b][j] = c;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vecs.size() && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    Rational inv = Rational(1) / m[rank][col];
    for (std::size_t j = col; j < vecs.size(); ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < vecs.size(); ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

AdaptedBasis::AdaptedBasis(std::array<Mv, 4> frame)
    : frame_(std::move(frame)),
      volume_(kSta),
      p_plus_(kSta),
      p_minus_(kSta) {
  Mv sq0 = frame_[0] * frame_[0];
  if (!(sq0 == Mv::scalar(kSta, 1))) fail(ErrorCode::NotAdapted, "n^0 must square to +1");
  for (int i = 1; i < 4; ++i) {
    if (!(frame_[std::size_t(i)] * frame_[std::size_t(i)] == Mv::scalar(kSta, -1)))
      fail(ErrorCode::NotAdapted, "spatial frame element must square to -1");
  }
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      Mv anti = frame_[std::size_t(a)] * frame_[std::size_t(b)] +
                frame_[std::size_t(b)] * frame_[std::size_t(a)];
      if (!anti.is_zero()) fail(ErrorCode::NotAdapted, "frame elements must anticommute");
    }

  volume_ = frame_[1] * frame_[2] * frame_[3];
  Mv one = Mv::scalar(kSta, 1);
  p_plus_ = (one + volume_).halved();
  p_minus_ = (one - volume_).halved();

  // gamma^nu = sum_mu raised(mu) * direction[mu][nu]; orthonormality gives the
  // coefficients directly as G_mu g(gamma^nu, raised(mu)).
  for (int mu = 0; mu < 4; ++mu) {
    Mv r = raised(mu);
    for (int nu = 0; nu < 4; ++nu) {
      Mv gamma_nu = Mv::basis_vector(kSta, nu).scaled_int(kSta.metric_sign(nu));
      direction_[std::size_t(mu)][std::size_t(nu)] =
          Rational(kSta.metric_sign(mu)) * extended_metric(gamma_nu, r);
    }
  }
  for (int nu = 0; nu < 4; ++nu) {
    Mv acc(kSta);
    for (int mu = 0; mu < 4; ++mu)
      acc += raised(mu).scaled(direction_[std::size_t(mu)][std::size_t(nu)]);
    if (!(acc == Mv::basis_vector(kSta, nu).scaled_int(kSta.metric_sign(nu))))
      fail(ErrorCode::NotAdapted, "frame does not span the coframe");
  }
}

AdaptedBasis AdaptedBasis::standard() {
  return from_versor(Versor<Rational>::identity(kSta));
}

AdaptedBasis AdaptedBasis::from_versor(const Versor<Rational>& l) {
  std::array<Mv, 4> frame{Mv(kSta), Mv(kSta), Mv(kSta), Mv(kSta)};
  for (int mu = 0; mu < 4; ++mu) frame[std::size_t(mu)] = l.sandwich(Mv::basis_vector(kSta, mu));
  return AdaptedBasis(std::move(frame));
}

Multivector<Rational> AdaptedBasis::raised(int mu) const {
  return frame_.at(std::size_t(mu)).scaled_int(kSta.metric_sign(mu));
}

Multivector<Rational> AdaptedBasis::pair(int i, int j) const {
  return frame_.at(std::size_t(i)) * frame_.at(std::size_t(j));
}

FieldMv AdaptedBasis::directional_derivative(const FieldMv& psi, int mu) const {
  FieldMv acc(kSta);
  for (int nu = 0; nu < 4; ++nu) {
    const Rational& c = direction_[std::size_t(mu)][std::size_t(nu)];
    if (c.is_zero()) continue;
    acc += field_partial(psi, nu).scaled(RationalFunction::constant(c, 4));
  }
  return acc;
}

std::array<Mv, 8> parallel_subalgebra_basis(const AdaptedBasis& frame) {
  std::array<Mv, 8> basis{Mv::scalar(kSta, 1), frame.n(1),        frame.n(2),
                          frame.n(3),          frame.pair(1, 2),  frame.pair(2, 3),
                          frame.pair(3, 1),    frame.spatial_volume()};
  auto g = Grading<Rational>::vector(frame.n(0));
  for (const Mv& b : basis)
    if (!g.project(b).orthogonal.is_zero())
      fail(ErrorCode::NotAdapted, "parallel basis element is not alpha-even");

  // The eight odd counterparts n^0, n^{0i}, n^{0ij}, n^{0123}.
  std::vector<Mv> odd{frame.n(0)};
  for (int i = 1; i < 4; ++i) odd.push_back(frame.pair(0, i));
  for (auto [i, j] : {std::pair(1, 2), std::pair(2, 3), std::pair(3, 1)})
    odd.push_back(frame.n(0) * frame.pair(i, j));
  odd.push_back(frame.n(0) * frame.spatial_volume());
  for (const Mv& b : odd)
    if (!g.project(b).parallel.is_zero())
      fail(ErrorCode::NotAdapted, "orthogonal element is not alpha-odd");

  // Linear independence plus membership of all products gives closure.
  std::vector<Mv> as_vec(basis.begin(), basis.end());
  if (span_rank(as_vec) != 8) fail(ErrorCode::NotAdapted, "parallel basis is degenerate");
  for (const Mv& x : as_vec)
    for (const Mv& y : as_vec)
      if (expand_in(as_vec, x * y).empty())
        fail(ErrorCode::NotAdapted, "parallel basis does not close under the product");
  return basis;
}

std::vector<NamedCheck> quaternion_isomorphism_check(const AdaptedBasis& frame) {
  std::vector<NamedCheck> checks;
  Mv one = Mv::scalar(kSta, 1);
  const Mv& vol = frame.spatial_volume();
  const Mv& pp = frame.idempotent_plus();
  const Mv& pm = frame.idempotent_minus();

  bool cl03 = true;
  for (int i = 1; i < 4; ++i) cl03 = cl03 && frame.n(i) * frame.n(i) == -one;
  for (int i = 1; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      cl03 = cl03 && (frame.n(i) * frame.n(j) + frame.n(j) * frame.n(i)).is_zero();
  checks.push_back({"spatial_frame_has_cl03_relations", cl03});

  checks.push_back({"spatial_volume_squares_to_plus_one", vol * vol == one});
  bool central = true;
  for (const Mv& b : parallel_subalgebra_basis(frame)) central = central && vol * b == b * vol;
  checks.push_back({"spatial_volume_is_central_in_even_part", central});

  checks.push_back({"idempotents", pp * pp == pp && pm * pm == pm && (pp * pm).is_zero() &&
                                       (pm * pp).is_zero() && pp + pm == one});

  // Quaternion units inside each ideal: 1 -> P, i -> n^23 P, j -> n^31 P,
  // k -> n^12 P; the product kernel fixes i j = k with this labeling.
  static const int qsign[4][4] = {{+1, +1, +1, +1},
                                  {+1, -1, +1, -1},
                                  {+1, -1, -1, +1},
                                  {+1, +1, -1, -1}};
  static const int qidx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::array<Mv, 4> units{one, frame.pair(2, 3), frame.pair(3, 1), frame.pair(1, 2)};
  bool table_ok = true;
  for (int ideal_a = 0; ideal_a < 2; ++ideal_a) {
    for (int ideal_b = 0; ideal_b < 2; ++ideal_b) {
      const Mv& pa = ideal_a == 0 ? pp : pm;
      const Mv& pb = ideal_b == 0 ? pp : pm;
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          Mv prod = (units[std::size_t(a)] * pa) * (units[std::size_t(b)] * pb);
          Mv expect(kSta);
          if (ideal_a == ideal_b)
            expect = (units[std::size_t(qidx[a][b])] * pa).scaled_int(qsign[a][b]);
          table_ok = table_ok && prod == expect;
        }
      }
    }
  }
  checks.push_back({"sixty_four_products_match_double_quaternion_table", table_ok});
  return checks;
}

namespace {

template <class S>
Multivector<S> lift(const Mv& m, int) {
  if constexpr (std::is_same_v<S, Rational>) return m;
  else return lift_to_field(m);
}

}  // namespace

template <class S>
Multivector<S> make_spinor(const SpinorCoefficients<S>& k, const AdaptedBasis& frame) {
  Multivector<S> pp = lift<S>(frame.idempotent_plus(), 0);
  Multivector<S> pm = lift<S>(frame.idempotent_minus(), 0);
  Multivector<S> n12 = lift<S>(frame.pair(1, 2), 0);
  Multivector<S> n23 = lift<S>(frame.pair(2, 3), 0);
  Multivector<S> n31 = lift<S>(frame.pair(3, 1), 0);
  Multivector<S> out = pp.scaled(k.a) + (n12 * pp).scaled(k.b12) + (n23 * pp).scaled(k.b23) +
                       (n31 * pp).scaled(k.b31) + pm.scaled(k.c) + (n12 * pm).scaled(k.d12) +
                       (n23 * pm).scaled(k.d23) + (n31 * pm).scaled(k.d31);
  return out;
}

template <class S>
SpinorCoefficients<S> extract_spinor(const Multivector<S>& psi, const AdaptedBasis& frame) {
  // Evaluate the eight spinor generators and solve exactly for their weights;
  // inconsistency means psi is outside the alpha-even span.
  std::vector<Multivector<S>> gens;
  auto one_s = ScalarOps<S>::one(4);
  auto zero_s = ScalarOps<S>::zero(4);
  SpinorCoefficients<S> unit_k{zero_s, zero_s, zero_s, zero_s, zero_s, zero_s, zero_s, zero_s};
  std::array<S*, 8> slots{&unit_k.a,   &unit_k.b12, &unit_k.b23, &unit_k.b31,
                          &unit_k.c,   &unit_k.d12, &unit_k.d23, &unit_k.d31};
  for (std::size_t g = 0; g < 8; ++g) {
    *slots[g] = one_s;
    gens.push_back(make_spinor(unit_k, frame));
    *slots[g] = zero_s;
  }

  // Exact solve of sum_g x_g gens[g] = psi over the scalar field.
  const std::size_t n = kSta.blade_count();
  std::vector<std::vector<S>> m(n, std::vector<S>(9, zero_s));
  for (std::size_t g = 0; g < 8; ++g)
    for (const auto& [b, c] : gens[g].terms()) m[b][g] = c;
  for (const auto& [b, c] : psi.terms()) m[b][8] = c;

  std::vector<std::size_t> pivot_of_col(8, n);
  std::size_t row = 0;
  for (std::size_t col = 0; col < 8 && row < n; ++col) {
    std::size_t p = row;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    S inv = ScalarOps<S>::div(one_s, m[row][col]);
    for (std::size_t j = col; j < 9; ++j) m[row][j] = m[row][j] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      S f = m[i][col];
      for (std::size_t j = col; j < 9; ++j) m[i][j] = m[i][j] - f * m[row][j];
    }
    pivot_of_col[col] = row;
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (!m[i][8].is_zero()) fail(ErrorCode::NotEven, "element is outside the alpha-even span");

  SpinorCoefficients<S> out{zero_s, zero_s, zero_s, zero_s, zero_s, zero_s, zero_s, zero_s};
  std::array<S*, 8> outs{&out.a,   &out.b12, &out.b23, &out.b31,
                         &out.c,   &out.d12, &out.d23, &out.d31};
  for (std::size_t g = 0; g < 8; ++g)
    if (pivot_of_col[g] < n) *outs[g] = m[pivot_of_col[g]][8];
  return out;
}

template Multivector<Rational> make_spinor(const SpinorCoefficients<Rational>&, const AdaptedBasis&);
template Multivector<RationalFunction> make_spinor(const SpinorCoefficients<RationalFunction>&,
                                                   const AdaptedBasis&);
template SpinorCoefficients<Rational> extract_spinor(const Multivector<Rational>&,
                                                     const AdaptedBasis&);
template SpinorCoefficients<RationalFunction> extract_spinor(const Multivector<RationalFunction>&,
                                                             const AdaptedBasis&);

Multivector<Rational> make_sigma(const Rational& a1, const Rational& a2, const Rational& a3,
                                 const AdaptedBasis& frame) {
  return frame.pair(1, 2).scaled(a3) + frame.pair(2, 3).scaled(a1) + frame.pair(3, 1).scaled(a2);
}

bool sigma_validate(const Multivector<Rational>& sigma, const AdaptedBasis& frame) {
  Mv sq = sigma * sigma;
  if (!(sq == Mv::scalar(kSta, -1))) return false;
  return (frame.n(0) * sigma - sigma * frame.n(0)).is_zero();
}

FieldMv dirac_hestenes_residual(const FieldMv& psi, const Rational& m) {
  for (const auto& [b, c] : psi.terms())
    if (grade_of(b) % 2 != 0) fail(ErrorCode::NotEven, "spinor must be grade-even");
  FieldMv e12 = lift_to_field(Mv::blade(kSta, Blade(0b0110)));
  FieldMv e0 = lift_to_field(Mv::basis_vector(kSta, 0));
  return dirac(psi) * e12 - (psi * e0).scaled(RationalFunction::constant(m, 4));
}

GeneralDiracResiduals general_dirac_residual(const FieldMv& psi, const Multivector<Rational>& sigma,
                                             const AdaptedBasis& frame, const Rational& m) {
  if (!sigma_validate(sigma, frame)) fail(ErrorCode::BadSigma, "sigma fails its defining relations");
  SplittingField s = frame.splitting();
  if (!s.project(psi).orthogonal.is_zero())
    fail(ErrorCode::NotEven, "spinor field must be alpha-even");

  FieldMv n = lift_to_field(frame.n(0));
  FieldMv sig = lift_to_field(sigma);
  RationalFunction mass = RationalFunction::constant(m, 4);

  FieldMv dpsi = dirac(psi);
  auto dparts = s.project(dpsi);
  FieldMv breve = dparts.parallel * n + dparts.orthogonal;
  FieldMv digen = breve * sig + (psi * n).scaled(mass);

  FieldMv spatial(kSta);
  for (int k = 1; k < 4; ++k)
    spatial += lift_to_field(frame.raised(k)) * frame.directional_derivative(psi, k);
  FieldMv split_119 = spatial + frame.directional_derivative(grade_involution(psi), 0) -
                      (psi * sig).scaled(mass);

  GeneralDiracResiduals out{digen, split_119, FieldMv(kSta)};
  out.relation = split_119 + digen * n * sig;
  return out;
}

}  // namespace ga
