#pragma once

#include "kreinkit/factor.hpp"

namespace kreinkit {

// T: 𝔥₁ → 𝔥₂ with its defect, signature and link operators. Operators living on
// ran D_T or ran D_{T*} are stored on the full space and vanish on the complement.
struct JContractionData {
  DenseMatrix t;
  JSpace j1, j2;
  SymmetricMatrix d_t, d_tstar;
  SymmetricMatrix jt, jtstar;
  DenseMatrix l_t, l_tstar;
  Index kappa1 = 0, kappa2 = 0;

  Spectrum gram_t;       // J1 − TᵀJ2T
  Spectrum gram_tstar;   // J2 − TJ1Tᵀ
  SymmetricMatrix d_t_pinv, d_tstar_pinv;
  SymmetricMatrix p_t, p_tstar;  // projectors onto ran D_T, ran D_{T*}

  Index n1() const { return t.cols(); }
  Index n2() const { return t.rows(); }
};

inline JContractionData defect_data(const DenseMatrix& t, const JSpace& j1, const JSpace& j2,
                                    const Tolerance& tol = default_tolerance()) {
  require_dims(t.cols() == j1.dim() && t.rows() == j2.dim(), "T must map the j1-space into the j2-space");
  require(all_finite(t), ErrorKind::InvalidInput, "T has non-finite entries");
  JContractionData d;
  d.t = t;
  d.j1 = j1;
  d.j2 = j2;
  double sc = gram_scale(t);
  d.gram_t = Spectrum(j_gram(t, j1.j(), j2.j()), tol, sc);
  d.gram_tstar = Spectrum(j_gram_star(t, j1.j(), j2.j()), tol, sc);
  d.d_t = d.gram_t.modulus_power(0.5);
  d.d_tstar = d.gram_tstar.modulus_power(0.5);
  d.d_t_pinv = d.gram_t.pinv_power(0.5);
  d.d_tstar_pinv = d.gram_tstar.pinv_power(0.5);
  d.p_t = d.gram_t.range_projector();
  d.p_tstar = d.gram_tstar.range_projector();
  d.jt = d.gram_t.signature();
  d.jtstar = d.gram_tstar.signature();
  d.kappa1 = d.gram_t.inertia().n_minus;
  d.kappa2 = d.gram_tstar.inertia().n_minus;
  d.l_t = d.d_tstar_pinv.matrix() * t * j1.matrix() * d.d_t.matrix();
  d.l_tstar = d.d_t_pinv.matrix() * t.transpose() * j2.matrix() * d.d_tstar.matrix();
  return d;
}

// Defect identities: J_T D_T² = J1 − TᵀJ2T, J_T D_T = D_T J_T, and the two
// intertwining relations between the defect Grams.
inline double defect_identity_residual(const JContractionData& d) {
  const DenseMatrix& t = d.t;
  const DenseMatrix& j1 = d.j1.matrix();
  const DenseMatrix& j2 = d.j2.matrix();
  DenseMatrix g = j1 - t.transpose() * j2 * t;
  DenseMatrix gs = j2 - t * j1 * t.transpose();
  double r = 0.0;
  r = std::max(r, relative_residual(d.jt.matrix() * d.d_t.matrix() * d.d_t.matrix(), g));
  r = std::max(r, relative_residual(d.jtstar.matrix() * d.d_tstar.matrix() * d.d_tstar.matrix(), gs));
  r = std::max(r, relative_residual(d.jt.matrix() * d.d_t.matrix(), d.d_t.matrix() * d.jt.matrix()));
  r = std::max(r, relative_residual(d.jtstar.matrix() * d.d_tstar.matrix(), d.d_tstar.matrix() * d.jtstar.matrix()));
  r = std::max(r, relative_residual(g * j1 * t.transpose(), t.transpose() * j2 * gs));
  r = std::max(r, relative_residual(gs * j2 * t, t * j1 * g));
  return r;
}

inline double link_identity_residual(const JContractionData& d) {
  const DenseMatrix& pt = d.p_t.matrix();
  const DenseMatrix& pts = d.p_tstar.matrix();
  const DenseMatrix& jt = d.jt.matrix();
  const DenseMatrix& jts = d.jtstar.matrix();
  const DenseMatrix& dt = d.d_t.matrix();
  const DenseMatrix& dts = d.d_tstar.matrix();
  double r = 0.0;
  r = std::max(r, relative_residual(dts * d.l_t, d.t * d.j1.matrix() * dt));
  r = std::max(r, relative_residual(dt * d.l_tstar, d.t.transpose() * d.j2.matrix() * dts));
  r = std::max(r, relative_residual(d.l_t.transpose() * jts * pts, jt * d.l_tstar));
  r = std::max(r, relative_residual(pt * (jt - dt * d.j1.matrix() * dt) * pt, d.l_t.transpose() * jts * d.l_t));
  r = std::max(r, relative_residual(pts * (jts - dts * d.j2.matrix() * dts) * pts,
                                    d.l_tstar.transpose() * jt * d.l_tstar));
  return r;
}

inline bool verify_link_identities(const JContractionData& d, const Tolerance& tol = default_tolerance()) {
  return link_identity_residual(d) <= tol.residual;
}

namespace detail {

inline bool vanishes_off(const DenseMatrix& x, const SymmetricMatrix& range_proj, const Tolerance& tol) {
  return norm2(x - range_proj.matrix() * x) <= tol.subspace * (1.0 + norm2(x));
}

inline Index minus_count(const SymmetricMatrix& m, const Tolerance& tol, double scale) {
  return inertia_of(m, tol, scale).n_minus;
}

}  // namespace detail

// T_c = [T; KᵀD_T] for a J-contraction K: (𝔥₂′, J₂′) → (𝔇_T, J_T).
inline DenseMatrix column_extend(const JContractionData& d, const DenseMatrix& k, const JSpace& j2prime,
                                 const Tolerance& tol = default_tolerance()) {
  require_dims(k.rows() == d.n1() && k.cols() == j2prime.dim(), "K must map 𝔥₂′ into 𝔇_T");
  Index target = d.kappa1 - j2prime.n_minus();
  require(target >= 0, ErrorKind::NegativeTargetIndex, "κ₁ − ν₋(J₂′) is negative");
  require(is_psd(j_gram(k, j2prime.j(), d.jt), tol, gram_scale(k)), ErrorKind::KNotJContractive, "K is not J-contractive");
  require(detail::vanishes_off(k, d.p_t, tol), ErrorKind::ParameterInvariantViolated, "ran K must lie in ran D_T");

  DenseMatrix tc(d.n2() + j2prime.dim(), d.n1());
  tc << d.t, k.transpose() * d.d_t.matrix();
  SymmetricMatrix j2t = direct_sum(d.j2.j(), j2prime.j());
  Index got = detail::minus_count(j_gram(tc, d.j1.j(), j2t), tol, gram_scale(tc));
  require(got == target, ErrorKind::AssertionFailed, "column extension misses the target negative index");
  return tc;
}

inline DenseMatrix extract_column_parameter(const DenseMatrix& t_c, const JContractionData& d,
                                            const Tolerance& tol = default_tolerance()) {
  require_dims(t_c.cols() == d.n1() && t_c.rows() >= d.n2(), "column operator has wrong shape");
  require(close(t_c.topRows(d.n2()), d.t, tol.residual), ErrorKind::NotALifting,
          "upper block of the column differs from T");
  DenseMatrix c = t_c.bottomRows(t_c.rows() - d.n2());
  RangeSolve r = range_solve(d.gram_t, 0.5, c.transpose(), tol);
  if (!r.included) fail(ErrorKind::RangeInclusionFailed, "ran Cᵀ is not contained in ran D_T", r.residual);
  return r.s;
}

// T_r = [T, D_{T*}B] for a J-contraction B: (𝔥₁′, J₁′) → (𝔇_{T*}, J_{T*}).
inline DenseMatrix row_extend(const JContractionData& d, const DenseMatrix& b, const JSpace& j1prime,
                              const Tolerance& tol = default_tolerance()) {
  require_dims(b.rows() == d.n2() && b.cols() == j1prime.dim(), "B must map 𝔥₁′ into 𝔇_{T*}");
  Index target = d.kappa2 - j1prime.n_minus();
  require(target >= 0, ErrorKind::NegativeTargetIndex, "κ₂ − ν₋(J₁′) is negative");
  require(is_psd(j_gram(b, j1prime.j(), d.jtstar), tol, gram_scale(b)), ErrorKind::KNotJContractive, "B is not J-contractive");
  require(detail::vanishes_off(b, d.p_tstar, tol), ErrorKind::ParameterInvariantViolated,
          "ran B must lie in ran D_{T*}");

  DenseMatrix tr(d.n2(), d.n1() + j1prime.dim());
  tr << d.t, d.d_tstar.matrix() * b;
  SymmetricMatrix j1t = direct_sum(d.j1.j(), j1prime.j());
  Index got = detail::minus_count(j_gram_star(tr, j1t, d.j2.j()), tol, gram_scale(tr));
  require(got == target, ErrorKind::AssertionFailed, "row extension misses the target negative index");
  return tr;
}

inline DenseMatrix extract_row_parameter(const DenseMatrix& t_r, const JContractionData& d,
                                         const Tolerance& tol = default_tolerance()) {
  require_dims(t_r.rows() == d.n2() && t_r.cols() >= d.n1(), "row operator has wrong shape");
  require(close(t_r.leftCols(d.n1()), d.t, tol.residual), ErrorKind::NotALifting,
          "left block of the row differs from T");
  DenseMatrix r = t_r.rightCols(t_r.cols() - d.n1());
  RangeSolve s = range_solve(d.gram_tstar, 0.5, r, tol);
  if (!s.included) fail(ErrorKind::RangeInclusionFailed, "ran R is not contained in ran D_{T*}", s.residual);
  return s.s;
}

// ν₋(J̃₁ − T_rᵀJ₂T_r) = κ₁ + ν₋(J₁′ − BᵀJ_{T*}B)
inline Index row_index_formula(const JContractionData& d, const DenseMatrix& b, const JSpace& j1prime,
                               const Tolerance& tol = default_tolerance()) {
  require_dims(b.rows() == d.n2() && b.cols() == j1prime.dim(), "B must map 𝔥₁′ into 𝔇_{T*}");
  DenseMatrix bn = d.p_tstar.matrix() * b;
  Index formula = d.kappa1 + detail::minus_count(j_gram(bn, j1prime.j(), d.jtstar), tol, gram_scale(bn));
  DenseMatrix tr(d.n2(), d.n1() + j1prime.dim());
  tr << d.t, d.d_tstar.matrix() * bn;
  Index direct = detail::minus_count(j_gram(tr, direct_sum(d.j1.j(), j1prime.j()), d.j2.j()), tol, gram_scale(tr));
  require(formula == direct, ErrorKind::AssertionFailed, "row index formula disagrees with the direct count");
  return formula;
}

// Column counterpart: ν₋(J₂̃ − T_cJ₁T_cᵀ) = κ₂ + ν₋(J₂′ − KᵀJ_TK).
inline Index column_index_formula(const JContractionData& d, const DenseMatrix& k, const JSpace& j2prime,
                                  const Tolerance& tol = default_tolerance()) {
  require_dims(k.rows() == d.n1() && k.cols() == j2prime.dim(), "K must map 𝔥₂′ into 𝔇_T");
  DenseMatrix kn = d.p_t.matrix() * k;
  Index formula = d.kappa2 + detail::minus_count(j_gram(kn, j2prime.j(), d.jt), tol, gram_scale(kn));
  DenseMatrix tc(d.n2() + j2prime.dim(), d.n1());
  tc << d.t, kn.transpose() * d.d_t.matrix();
  Index direct = detail::minus_count(j_gram_star(tc, d.j1.j(), direct_sum(d.j2.j(), j2prime.j())), tol, gram_scale(tc));
  require(formula == direct, ErrorKind::AssertionFailed, "column index formula disagrees with the direct count");
  return formula;
}

struct LiftParameters {
  DenseMatrix gamma1;  // 𝔥₁′ → 𝔇_{T*}   (n2 × n1′)
  DenseMatrix gamma2;  // 𝔇_T → 𝔥₂′      (n2′ × n1)
  DenseMatrix gamma;   // 𝔇_{Γ₁} → 𝔇_{Γ₂*} (n2′ × n1′)
};

namespace detail {

struct ParameterDefects {
  Spectrum g1;   // J₁′ − Γ₁ᵀJ_{T*}Γ₁
  Spectrum g2s;  // J₂′ − Γ₂J_TΓ₂ᵀ
};

inline ParameterDefects parameter_defects(const JContractionData& d, const DenseMatrix& gamma1,
                                          const DenseMatrix& gamma2, const JSpace& j1p, const JSpace& j2p,
                                          const Tolerance& tol) {
  return ParameterDefects{Spectrum(j_gram(gamma1, j1p.j(), d.jtstar), tol, gram_scale(gamma1)),
                          Spectrum(j_gram_star(gamma2, d.jt, j2p.j()), tol, gram_scale(gamma2))};
}

inline SymmetricMatrix lifted_gram(const DenseMatrix& tt, const JSpace& j1, const JSpace& j2, const JSpace& j1p,
                                   const JSpace& j2p) {
  return j_gram(tt, direct_sum(j1.j(), j1p.j()), direct_sum(j2.j(), j2p.j()));
}

inline SymmetricMatrix lifted_gram_star(const DenseMatrix& tt, const JSpace& j1, const JSpace& j2,
                                        const JSpace& j1p, const JSpace& j2p) {
  return j_gram_star(tt, direct_sum(j1.j(), j1p.j()), direct_sum(j2.j(), j2p.j()));
}

inline void check_lift_indices(const DenseMatrix& tt, const JContractionData& d, const JSpace& j1p,
                               const JSpace& j2p, const Tolerance& tol, ErrorKind kind) {
  double sc = gram_scale(tt);
  Index k1 = minus_count(lifted_gram(tt, d.j1, d.j2, j1p, j2p), tol, sc);
  Index k2 = minus_count(lifted_gram_star(tt, d.j1, d.j2, j1p, j2p), tol, sc);
  require(k1 == d.kappa1 - j2p.n_minus() && k2 == d.kappa2 - j1p.n_minus(), kind,
          "negative indices of the lifting differ from κ₁ − ν₋(J₂′), κ₂ − ν₋(J₁′)");
}

inline DenseMatrix corner_coupling(const JContractionData& d, const LiftParameters& p) {
  return p.gamma2 * d.jt.matrix() * d.l_tstar * p.gamma1;
}

}  // namespace detail

inline DenseMatrix lift(const JContractionData& d, const LiftParameters& p, const JSpace& j1prime,
                        const JSpace& j2prime, const Tolerance& tol = default_tolerance()) {
  Index n1 = d.n1(), n2 = d.n2(), m1 = j1prime.dim(), m2 = j2prime.dim();
  require(d.kappa1 - j2prime.n_minus() >= 0 && d.kappa2 - j1prime.n_minus() >= 0, ErrorKind::HypothesisViolated,
          "requires ν₋(J₂′) ≤ κ₁ and ν₋(J₁′) ≤ κ₂");
  require_dims(p.gamma1.rows() == n2 && p.gamma1.cols() == m1, "Γ₁ must be n₂ × n₁′");
  require_dims(p.gamma2.rows() == m2 && p.gamma2.cols() == n1, "Γ₂ must be n₂′ × n₁");
  require_dims(p.gamma.rows() == m2 && p.gamma.cols() == m1, "Γ must be n₂′ × n₁′");

  auto pd = detail::parameter_defects(d, p.gamma1, p.gamma2, j1prime, j2prime, tol);
  const auto bad = ErrorKind::ParameterInvariantViolated;
  require(is_psd(pd.g1, tol), bad, "Γ₁ is not J-contractive");
  require(is_psd(pd.g2s, tol), bad, "Γ₂ᵀ is not J-contractive");
  require(detail::vanishes_off(p.gamma1, d.p_tstar, tol), bad, "ran Γ₁ must lie in ran D_{T*}");
  require(detail::vanishes_off(p.gamma2.transpose(), d.p_t, tol), bad, "ran Γ₂ᵀ must lie in ran D_T");
  require(norm2(p.gamma) <= 1.0 + tol.psd, bad, "Γ is not a contraction");
  require(detail::vanishes_off(p.gamma, pd.g2s.range_projector(), tol) &&
              detail::vanishes_off(p.gamma.transpose(), pd.g1.range_projector(), tol),
          bad, "Γ must map ran D_{Γ₁} into ran D_{Γ₂*}");

  DenseMatrix tt(n2 + m2, n1 + m1);
  tt.topLeftCorner(n2, n1) = d.t;
  tt.topRightCorner(n2, m1) = d.d_tstar.matrix() * p.gamma1;
  tt.bottomLeftCorner(m2, n1) = p.gamma2 * d.d_t.matrix();
  tt.bottomRightCorner(m2, m1) = -detail::corner_coupling(d, p) +
                                 pd.g2s.modulus_power(0.5).matrix() * p.gamma * pd.g1.modulus_power(0.5).matrix();
  detail::check_lift_indices(tt, d, j1prime, j2prime, tol, ErrorKind::AssertionFailed);
  return tt;
}

inline LiftParameters extract_lift_parameters(const DenseMatrix& t_tilde, const JContractionData& d,
                                              const JSpace& j1prime, const JSpace& j2prime,
                                              const Tolerance& tol = default_tolerance()) {
  Index n1 = d.n1(), n2 = d.n2(), m1 = j1prime.dim(), m2 = j2prime.dim();
  require_dims(t_tilde.rows() == n2 + m2 && t_tilde.cols() == n1 + m1, "lifting has wrong shape");
  require(close(t_tilde.topLeftCorner(n2, n1), d.t, tol.residual), ErrorKind::NotALifting,
          "compression of the lifting differs from T");
  detail::check_lift_indices(t_tilde, d, j1prime, j2prime, tol, ErrorKind::IndexMismatch);

  LiftParameters p;
  RangeSolve r1 = range_solve(d.gram_tstar, 0.5, t_tilde.topRightCorner(n2, m1), tol);
  if (!r1.included) fail(ErrorKind::RangeInclusionFailed, "ran R is not contained in ran D_{T*}", r1.residual);
  RangeSolve r2 = range_solve(d.gram_t, 0.5, t_tilde.bottomLeftCorner(m2, n1).transpose(), tol);
  if (!r2.included) fail(ErrorKind::RangeInclusionFailed, "ran Cᵀ is not contained in ran D_T", r2.residual);
  p.gamma1 = r1.s;
  p.gamma2 = r2.s.transpose();

  auto pd = detail::parameter_defects(d, p.gamma1, p.gamma2, j1prime, j2prime, tol);
  DenseMatrix y = t_tilde.bottomRightCorner(m2, m1) + detail::corner_coupling(d, p);
  p.gamma = pd.g2s.pinv_power(0.5).matrix() * y * pd.g1.pinv_power(0.5).matrix();
  DenseMatrix back = pd.g2s.modulus_power(0.5).matrix() * p.gamma * pd.g1.modulus_power(0.5).matrix();
  if (!close(back, y, tol.residual))
    fail(ErrorKind::RangeInclusionFailed, "corner residual escapes D_{Γ₂*}[·]D_{Γ₁}", norm2(back - y));
  return p;
}

namespace detail {

inline void require_j_contractive(const JContractionData& d) {
  require(d.kappa1 == 0, ErrorKind::NotJContractive, "T is not a J-contraction");
}

}  // namespace detail

// J₂T maps ker D_T onto ker D_{T*}, and J₁Tᵀ maps ker D_{T*} onto ker D_T.
inline bool kernel_map_check(const JContractionData& d, const Tolerance& tol = default_tolerance()) {
  detail::require_j_contractive(d);
  DenseMatrix k1 = d.gram_t.kernel_basis();
  DenseMatrix k2 = d.gram_tstar.kernel_basis();
  double sc = 1.0 + norm2(d.t);
  DenseMatrix img1 = orthonormal_range(d.j2.matrix() * d.t * k1, tol, sc);
  DenseMatrix img2 = orthonormal_range(d.j1.matrix() * d.t.transpose() * k2, tol, sc);
  return same_subspace(img1, k2, tol) && same_subspace(img2, k1, tol);
}

inline DenseMatrix range_intersection(const JContractionData& d, const Tolerance& tol = default_tolerance()) {
  detail::require_j_contractive(d);
  double sc = gram_scale(d.t);
  DenseMatrix a = orthonormal_range(d.t * d.j1.matrix() * d.d_t.matrix(), tol, sc);
  DenseMatrix b = orthonormal_range(d.d_tstar.matrix() * d.l_t, tol, sc);
  DenseMatrix c = subspace_intersection(orthonormal_range(d.t, tol), d.gram_tstar.range_basis(), tol);
  require(same_subspace(a, b, tol) && same_subspace(a, c, tol), ErrorKind::AssertionFailed,
          "ran TJ₁D_T, ran D_{T*}L_T and ran T ∩ ran D_{T*} differ");
  return a;
}

struct JIsometryReport {
  bool gram_test = false;       // TᵀJ₂T = J₁
  bool range_test = false;      // ker T = 0 and ran T ∩ ran D_{T*} = 0
  bool defect_test = false;     // every nonzero Tφ escapes ran D_{T*}
  bool agree() const { return gram_test == range_test && range_test == defect_test; }
};

inline JIsometryReport j_isometry_test(const JContractionData& d, const Tolerance& tol = default_tolerance()) {
  detail::require_j_contractive(d);
  JIsometryReport r;
  double scale = gram_scale(d.t);
  r.gram_test = norm2(d.t.transpose() * d.j2.matrix() * d.t - d.j1.matrix()) <= tol.residual * scale;
  DenseMatrix ran_t = orthonormal_range(d.t, tol);
  bool injective = ran_t.cols() == d.n1();
  r.range_test = injective && subspace_intersection(ran_t, d.gram_tstar.range_basis(), tol).cols() == 0;
  // Tφ ∉ ran D_{T*} for all φ with Tφ ≠ 0, and T injective: P_{ker D_{T*}}T has full column rank.
  DenseMatrix pk = DenseMatrix::Identity(d.n2(), d.n2()) - d.p_tstar.matrix();
  r.defect_test = numerical_rank(pk * d.t, tol, 1.0 + norm2(d.t)) == d.n1();
  require(r.agree(), ErrorKind::AssertionFailed, "J-isometry criteria disagree");
  return r;
}

}  // namespace kreinkit
