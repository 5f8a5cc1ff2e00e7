#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>

#include "kreinkit/quasicontraction.hpp"

namespace kreinkit {

// Subspace of 𝔥 ⊕ 𝔥 stored as an orthonormal basis Q = [Q_top; Q_bot] (2n × k).
// Each column q gives a pair (f, f′) = (Q_top·x, Q_bot·x).
class LinearRelation {
 public:
  LinearRelation() = default;

  static LinearRelation from_generators(const DenseMatrix& f, const DenseMatrix& fp,
                                        const Tolerance& tol = default_tolerance()) {
    require_dims(f.rows() == fp.rows() && f.cols() == fp.cols(), "generator blocks must have equal shapes");
    require(all_finite(f) && all_finite(fp), ErrorKind::InvalidInput, "generators have non-finite entries");
    DenseMatrix g(2 * f.rows(), f.cols());
    g << f, fp;
    return LinearRelation(f.rows(), orthonormal_range(g, tol));
  }

  static LinearRelation from_operator(const DenseMatrix& m, const Tolerance& tol = default_tolerance()) {
    require_dims(m.rows() == m.cols(), "operator must be square");
    return from_generators(DenseMatrix::Identity(m.rows(), m.cols()), m, tol);
  }

  // Q must already be orthonormal.
  static LinearRelation from_basis(Index n, const DenseMatrix& q) {
    require_dims(q.rows() == 2 * n, "graph basis must have 2n rows");
    return LinearRelation(n, q);
  }

  Index space_dim() const { return n_; }
  Index graph_dim() const { return q_.cols(); }
  const DenseMatrix& basis() const { return q_; }
  DenseMatrix top() const { return q_.topRows(n_); }
  DenseMatrix bottom() const { return q_.bottomRows(n_); }
  DenseMatrix graph_projector() const { return projector(q_); }

 private:
  LinearRelation(Index n, DenseMatrix q) : n_(n), q_(std::move(q)) {}

  Index n_ = 0;
  DenseMatrix q_;
};

namespace detail {

// Rank decisions on blocks of an orthonormal basis use an absolute floor of 1.
constexpr double kBasisScale = 1.0;

inline DenseMatrix stack(const DenseMatrix& top, const DenseMatrix& bottom) {
  DenseMatrix g(top.rows() + bottom.rows(), top.cols());
  g << top, bottom;
  return g;
}

inline void require_same_space(const LinearRelation& a, const LinearRelation& b) {
  require_dims(a.space_dim() == b.space_dim(), "relations live in spaces of different dimension");
}

}  // namespace detail

inline double relation_distance(const LinearRelation& a, const LinearRelation& b) {
  detail::require_same_space(a, b);
  return subspace_distance(a.basis(), b.basis());
}

inline bool same_relation(const LinearRelation& a, const LinearRelation& b,
                          const Tolerance& tol = default_tolerance()) {
  detail::require_same_space(a, b);
  return same_subspace(a.basis(), b.basis(), tol);
}

// a ⊇ b
inline bool extends(const LinearRelation& a, const LinearRelation& b, const Tolerance& tol = default_tolerance()) {
  detail::require_same_space(a, b);
  DenseMatrix resid = b.basis() - a.basis() * (a.basis().transpose() * b.basis());
  return norm2(resid) <= tol.subspace;
}

inline DenseMatrix mul_basis(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  DenseMatrix n = null_space(a.top(), tol, detail::kBasisScale);
  return orthonormal_range(a.bottom() * n, tol, detail::kBasisScale);
}

inline DenseMatrix ker_basis(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  DenseMatrix n = null_space(a.bottom(), tol, detail::kBasisScale);
  return orthonormal_range(a.top() * n, tol, detail::kBasisScale);
}

inline DenseMatrix dom_basis(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  return orthonormal_range(a.top(), tol, detail::kBasisScale);
}

inline DenseMatrix ran_basis(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  return orthonormal_range(a.bottom(), tol, detail::kBasisScale);
}

// {(h, k) : (f′, h) = (f, k) for all (f, f′) ∈ A}
inline LinearRelation adjoint(const LinearRelation& a) {
  DenseMatrix flipped = detail::stack(a.bottom(), -a.top());
  return LinearRelation::from_basis(a.space_dim(), orthogonal_complement(flipped));
}

inline LinearRelation inverse(const LinearRelation& a) {
  return LinearRelation::from_basis(a.space_dim(), detail::stack(a.bottom(), a.top()));
}

inline LinearRelation negate(const LinearRelation& a) {
  return LinearRelation::from_basis(a.space_dim(), detail::stack(a.top(), -a.bottom()));
}

// (f, f′) ↦ (f, f′ + c·f)
inline LinearRelation shift(const LinearRelation& a, double c, const Tolerance& tol = default_tolerance()) {
  return LinearRelation::from_generators(a.top(), a.bottom() + c * a.top(), tol);
}

// (f, f′) ↦ (f + f′, f − f′); the map is orthogonal up to 1/√2, so the basis stays orthonormal.
inline LinearRelation cayley(const LinearRelation& a) {
  const double s = 1.0 / std::sqrt(2.0);
  DenseMatrix t = a.top(), b = a.bottom();
  return LinearRelation::from_basis(a.space_dim(), detail::stack(s * (t + b), s * (t - b)));
}

struct FormData {
  SymmetricMatrix gram;
  Index negatives = 0;
};

struct RelationClass {
  bool symmetric = false;
  bool selfadjoint = false;
  bool nonnegative = false;
  Index negatives = 0;
};

// Gram of (f′, f) over the canonical basis.
inline FormData form_a(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  FormData d;
  d.gram = SymmetricMatrix(DenseMatrix(a.top().transpose() * a.bottom()));
  d.negatives = inertia_of(d.gram, tol, detail::kBasisScale).n_minus;
  return d;
}

inline RelationClass classify(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  RelationClass c;
  LinearRelation adj = adjoint(a);
  c.symmetric = extends(adj, a, tol);
  c.selfadjoint = c.symmetric && a.graph_dim() == adj.graph_dim() && same_relation(a, adj, tol);
  FormData f = form_a(a, tol);
  c.negatives = f.negatives;
  c.nonnegative = c.symmetric && f.negatives == 0;
  return c;
}

inline void require_symmetric(const LinearRelation& a, const Tolerance& tol) {
  require(classify(a, tol).symmetric, ErrorKind::NotSymmetric, "relation is not symmetric");
}

inline void require_selfadjoint(const LinearRelation& a, const Tolerance& tol) {
  require(classify(a, tol).selfadjoint, ErrorKind::NotSelfadjoint, "relation is not selfadjoint");
}

// Matrix of a relation without multivalued part, on the full space (zero off dom).
struct BoundedOperator {
  DenseMatrix dom;     // orthonormal basis of dom T
  DenseMatrix matrix;  // n × n, vanishes on dom T^⊥
};

inline std::optional<BoundedOperator> as_bounded_operator(const LinearRelation& t,
                                                         const Tolerance& tol = default_tolerance()) {
  Index n = t.space_dim(), k = t.graph_dim();
  if (k == 0) return BoundedOperator{DenseMatrix(n, 0), DenseMatrix::Zero(n, n)};
  if (k > n) return std::nullopt;
  DenseMatrix qt = t.top();
  Eigen::JacobiSVD<DenseMatrix> svd(qt, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& sv = svd.singularValues();
  if (sv(k - 1) <= svd_threshold(sv, qt.rows(), qt.cols(), tol, detail::kBasisScale)) return std::nullopt;
  BoundedOperator op;
  op.dom = svd.matrixU();
  op.matrix = t.bottom() * svd.matrixV() * sv.cwiseInverse().asDiagonal() * op.dom.transpose();
  return op;
}

// Splitting of a selfadjoint relation into its operator part on dom H and its mul part.
struct OperatorPart {
  DenseMatrix dom;
  DenseMatrix mul;
  SymmetricMatrix op;  // compression to dom H
};

inline OperatorPart operator_part(const LinearRelation& h, const Tolerance& tol = default_tolerance()) {
  require_selfadjoint(h, tol);
  Index n = h.space_dim(), k = h.graph_dim();
  OperatorPart p;
  if (k == 0) {
    p.dom = DenseMatrix(n, 0);
    p.mul = DenseMatrix(n, 0);
    p.op = SymmetricMatrix::zero(0);
    return p;
  }
  DenseMatrix qt = h.top();
  Eigen::JacobiSVD<DenseMatrix> svd(qt, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  double thr = svd_threshold(sv, qt.rows(), qt.cols(), tol, detail::kBasisScale);
  Index r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  DenseMatrix wd = svd.matrixV().leftCols(r);
  p.dom = svd.matrixU().leftCols(r);
  p.mul = orthonormal_range(h.bottom() * svd.matrixV().rightCols(k - r), tol, detail::kBasisScale);
  DenseMatrix inv = sv.head(r).cwiseInverse().asDiagonal();
  p.op = SymmetricMatrix(DenseMatrix(p.dom.transpose() * h.bottom() * wd * inv));
  return p;
}

// (i⁺, i⁻, i⁰, i^∞) of a selfadjoint relation.
inline Inertia relation_inertia(const LinearRelation& h, const Tolerance& tol = default_tolerance()) {
  OperatorPart p = operator_part(h, tol);
  Inertia i = inertia_of(p.op, tol, detail::kBasisScale);
  i.n_inf = p.mul.cols();
  return i;
}

// Lower bound of the operator part; +∞ when H is purely multivalued.
inline double lower_bound(const OperatorPart& p) {
  if (p.op.dim() == 0) return std::numeric_limits<double>::infinity();
  return min_eigenvalue(p.op);
}

// (H − s)^{-1} on 𝔥: operator part inverted on dom H, zero on mul H.
inline SymmetricMatrix resolvent(const OperatorPart& p, double s) {
  Index r = p.op.dim();
  Index n = p.dom.rows();
  if (r == 0) return SymmetricMatrix::zero(n);
  DenseMatrix shifted = p.op.matrix() - s * DenseMatrix::Identity(r, r);
  DenseMatrix inv = shifted.inverse();
  return SymmetricMatrix(DenseMatrix(p.dom * inv * p.dom.transpose()));
}

inline SymmetricMatrix resolvent(const LinearRelation& h, double s, const Tolerance& tol = default_tolerance()) {
  return resolvent(operator_part(h, tol), s);
}

namespace detail {

inline double common_shift(double mu1, double mu2) {
  double m = std::min(mu1, mu2);
  return std::isfinite(m) ? m - 1.0 : -1.0;
}

}  // namespace detail

// H₁ ≤ H₂ ⇔ (H₂ − a)^{-1} ⪯ (H₁ − a)^{-1} with a below both lower bounds.
inline bool relation_leq(const LinearRelation& h1, const LinearRelation& h2, const Tolerance& tol = default_tolerance()) {
  detail::require_same_space(h1, h2);
  OperatorPart p1 = operator_part(h1, tol), p2 = operator_part(h2, tol);
  double a = detail::common_shift(lower_bound(p1), lower_bound(p2));
  return loewner_leq(resolvent(p2, a), resolvent(p1, a), tol);
}

inline bool relation_leq_at(const LinearRelation& h1, const LinearRelation& h2, double a,
                            const Tolerance& tol = default_tolerance()) {
  detail::require_same_space(h1, h2);
  OperatorPart p1 = operator_part(h1, tol), p2 = operator_part(h2, tol);
  require(a < lower_bound(p1) && a < lower_bound(p2), ErrorKind::ShiftNotAdmissible,
          "shift must lie below both lower bounds");
  return loewner_leq(resolvent(p2, a), resolvent(p1, a), tol);
}

// ---- extensions with minimal negative index ----

struct KreinData {
  LinearRelation a;
  Index kappa = 0;      // ν₋(a₁)
  DenseMatrix u1, u2;   // orthonormal bases of 𝔥₁ = ran(I + A) and its complement
  DenseMatrix t1;       // Cayley transform as an n × n matrix, zero on 𝔥₂
  DenseMatrix r;        // (I + A)^{-1}: 𝔥₁ → 𝔥, as n × n matrix zero on 𝔥₂
  ExtremalPair pair;    // in the coordinates [u1 u2]
  SymmetricMatrix t_m, t_M;  // extremal extensions on 𝔥
  LinearRelation a_f, a_k;
};

namespace detail {

struct CayleySide {
  DenseMatrix u1, u2, t1;
  SymmetricColumn column;
};

inline CayleySide cayley_side(const LinearRelation& a, const Tolerance& tol) {
  auto op = as_bounded_operator(cayley(a), tol);
  if (!op) fail(ErrorKind::CayleyNotOperator, "ker(A + I) ≠ {0}, so the Cayley transform is multivalued");
  CayleySide c;
  c.u1 = op->dom;
  c.u2 = orthogonal_complement(c.u1);
  c.t1 = op->matrix;
  c.column = SymmetricColumn(SymmetricMatrix(DenseMatrix(c.u1.transpose() * c.t1 * c.u1)),
                             c.u2.transpose() * c.t1 * c.u1);
  return c;
}

inline DenseMatrix frame(const DenseMatrix& u1, const DenseMatrix& u2) {
  DenseMatrix w(u1.rows(), u1.cols() + u2.cols());
  w << u1, u2;
  return w;
}

}  // namespace detail

namespace detail {

struct FormPair {
  FormData a1;
  double residual = 0.0;
};

// a₁(f, f) = (P₁f′, f) with P₁ the projector onto ran(I + A), plus the worst
// residual of the Cayley-side identities with g = f + f′ and T₁g = f − f′.
inline FormPair form_a1_with_residual(const LinearRelation& a, const Tolerance& tol) {
  DenseMatrix qt = a.top(), qb = a.bottom();
  DenseMatrix g = qt + qb, h = qt - qb;
  Index n = a.space_dim();
  DenseMatrix p1 = projector(orthonormal_range(g, tol, kBasisScale));
  DenseMatrix p2 = DenseMatrix::Identity(n, n) - p1;

  FormPair out;
  out.a1.gram = SymmetricMatrix(DenseMatrix(qt.transpose() * p1 * qb));
  out.a1.negatives = inertia_of(out.a1.gram, tol, kBasisScale).n_minus;

  DenseMatrix gram_a = form_a(a, tol).gram.matrix();
  DenseMatrix gg = g.transpose() * g;
  double r1 = norm2(4.0 * out.a1.gram.matrix() - (gg - h.transpose() * p1 * h));
  double r2 = norm2(4.0 * gram_a - (gg - h.transpose() * h));
  double r3 = norm2(h.transpose() * p2 * h - 4.0 * qt.transpose() * p2 * qt);
  double r4 = norm2(out.a1.gram.matrix() - gram_a - qt.transpose() * p2 * qt);
  out.residual = std::max({r1, r2, r3, r4});
  return out;
}

}  // namespace detail

inline double form_identity_residual(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  require_symmetric(a, tol);
  return detail::form_a1_with_residual(a, tol).residual;
}

inline FormData form_a1(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  require_symmetric(a, tol);
  detail::FormPair fp = detail::form_a1_with_residual(a, tol);
  if (fp.residual > tol.residual) fail(ErrorKind::AssertionFailed, "form identities on the Cayley side fail", fp.residual);
  return fp.a1;
}

inline KreinData krein_data(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  require_symmetric(a, tol);
  detail::CayleySide cs = detail::cayley_side(a, tol);
  KreinData kd;
  kd.a = a;
  kd.u1 = cs.u1;
  kd.u2 = cs.u2;
  kd.t1 = cs.t1;

  FormData a1 = form_a1(a, tol);
  Index nu_a = form_a(a, tol).negatives;
  kd.kappa = a1.negatives;
  SolvabilityCounts sc = solvability_counts(cs.column, tol);
  require(sc.lhs == kd.kappa && sc.rhs == nu_a, ErrorKind::AssertionFailed,
          "form indices disagree with the Cayley-side indices");
  if (nu_a != kd.kappa)
    fail(ErrorKind::NotSolvable,
         "ν₋(A) = " + std::to_string(nu_a) + " but ν₋(a₁) = " + std::to_string(kd.kappa));

  kd.pair = extremal_extensions(cs.column, tol);
  DenseMatrix w = detail::frame(cs.u1, cs.u2);
  kd.t_m = SymmetricMatrix(DenseMatrix(w * kd.pair.t_m.matrix() * w.transpose()));
  kd.t_M = SymmetricMatrix(DenseMatrix(w * kd.pair.t_M.matrix() * w.transpose()));
  kd.a_f = cayley(LinearRelation::from_operator(kd.t_m.matrix(), tol));
  kd.a_k = cayley(LinearRelation::from_operator(kd.t_M.matrix(), tol));

  // (I + A)^{-1} g = f for g = f + f′.
  DenseMatrix qt = a.top(), g = qt + a.bottom();
  Eigen::CompleteOrthogonalDecomposition<DenseMatrix> cod(g);
  kd.r = qt * cod.pseudoInverse() * cs.u1 * cs.u1.transpose();

  for (const LinearRelation* e : {&kd.a_f, &kd.a_k}) {
    require(classify(*e, tol).selfadjoint, ErrorKind::AssertionFailed, "extremal extension is not selfadjoint");
    require(extends(*e, a, tol), ErrorKind::AssertionFailed, "extremal extension does not extend A");
    require(relation_inertia(*e, tol).n_minus == kd.kappa, ErrorKind::AssertionFailed,
            "extremal extension has the wrong negative index");
  }
  return kd;
}

inline std::pair<LinearRelation, LinearRelation> friedrichs_krein(const LinearRelation& a,
                                                                  const Tolerance& tol = default_tolerance()) {
  KreinData kd = krein_data(a, tol);
  return {kd.a_f, kd.a_k};
}

namespace detail {

inline void require_selfadjoint_extension(const KreinData& kd, const LinearRelation& at, const Tolerance& tol) {
  require_same_space(kd.a, at);
  require_selfadjoint(at, tol);
  require(extends(at, kd.a, tol), ErrorKind::NotAnExtension, "candidate does not extend A");
}

}  // namespace detail

// Three independent membership verdicts for Ext_{A,κ}(0, ∞).
struct MembershipReport {
  bool by_cayley = false;  // T_m ⪯ 𝒞(Ã) ⪯ T_M
  bool by_order = false;   // A_K ≤ Ã ≤ A_F
  bool by_index = false;   // i⁻(Ã) = κ
  bool agree() const { return by_cayley == by_order && by_order == by_index; }
};

inline MembershipReport membership_report(const KreinData& kd, const LinearRelation& at,
                                          const Tolerance& tol = default_tolerance()) {
  detail::require_selfadjoint_extension(kd, at, tol);
  MembershipReport m;
  if (auto t = as_bounded_operator(cayley(at), tol)) {
    SymmetricMatrix tm(t->matrix);
    m.by_cayley = loewner_leq(kd.t_m, tm, tol) && loewner_leq(tm, kd.t_M, tol);
  }
  m.by_order = relation_leq(kd.a_k, at, tol) && relation_leq(at, kd.a_f, tol);
  m.by_index = relation_inertia(at, tol).n_minus == kd.kappa;
  return m;
}

inline bool ext_membership(const KreinData& kd, const LinearRelation& at, const Tolerance& tol = default_tolerance()) {
  MembershipReport m = membership_report(kd, at, tol);
  require(m.agree(), ErrorKind::AssertionFailed, "membership characterizations disagree");
  return m.by_cayley;
}

inline bool ext_membership(const LinearRelation& a, const LinearRelation& at,
                           const Tolerance& tol = default_tolerance()) {
  return ext_membership(krein_data(a, tol), at, tol);
}

// Smallest operator-part eigenvalue among A_F, A_K and Ã.
inline double uniform_lower_bound(const KreinData& kd, const LinearRelation& at,
                                  const Tolerance& tol = default_tolerance()) {
  return std::min({lower_bound(operator_part(kd.a_f, tol)), lower_bound(operator_part(kd.a_k, tol)),
                   lower_bound(operator_part(at, tol))});
}

// (A_F + a)^{-1} ⪯ (Ã + a)^{-1} ⪯ (A_K + a)^{-1}
inline bool resolvent_interval_check(const KreinData& kd, const LinearRelation& at, double a,
                                     const Tolerance& tol = default_tolerance()) {
  detail::require_selfadjoint_extension(kd, at, tol);
  double mu = uniform_lower_bound(kd, at, tol);
  require(a > -mu, ErrorKind::ShiftNotAdmissible, "shift must exceed minus the uniform lower bound");
  SymmetricMatrix rf = resolvent(kd.a_f, -a, tol);
  SymmetricMatrix rt = resolvent(at, -a, tol);
  SymmetricMatrix rk = resolvent(kd.a_k, -a, tol);
  return loewner_leq(rf, rt, tol) && loewner_leq(rt, rk, tol);
}

struct DualityDistances {
  double friedrichs = 0.0;  // ‖P((A⁻¹)_F) − P((A_K)⁻¹)‖
  double krein = 0.0;       // ‖P((A⁻¹)_K) − P((A_F)⁻¹)‖
};

inline DualityDistances inverse_duality_distances(const KreinData& kd, const Tolerance& tol = default_tolerance()) {
  KreinData inv = krein_data(inverse(kd.a), tol);
  return {relation_distance(inv.a_f, inverse(kd.a_k)), relation_distance(inv.a_k, inverse(kd.a_f))};
}

inline bool inverse_duality_check(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  DualityDistances d = inverse_duality_distances(krein_data(a, tol), tol);
  return d.friedrichs <= tol.subspace && d.krein <= tol.subspace;
}

// ---- antitonicity ----

// Invertible symmetric H₁ ⪯ H₂: returns whether H₂^{-1} ⪯ H₁^{-1}, asserting the
// equivalence with equality of inertia.
inline bool antitonicity_check(const SymmetricMatrix& h1, const SymmetricMatrix& h2,
                               const Tolerance& tol = default_tolerance()) {
  require_dims(h1.dim() == h2.dim(), "matrices must have equal dimension");
  Spectrum s1(h1, tol), s2(h2, tol);
  require(s1.inertia().n_zero == 0 && s2.inertia().n_zero == 0, ErrorKind::PreconditionViolated,
          "both matrices must be invertible");
  require(loewner_leq(h1, h2, tol), ErrorKind::PreconditionViolated, "requires H₁ ⪯ H₂");
  bool holds = loewner_leq(s2.pinv(), s1.pinv(), tol);
  bool same = s1.inertia() == s2.inertia();
  require(holds == same, ErrorKind::AssertionFailed, "inverse order disagrees with the inertia test");
  return holds;
}

// Selfadjoint relations with H₁ ≤ H₂: returns whether H₂^{-1} ≤ H₁^{-1}, asserting
// the equivalence with i⁻(H₁) = i⁻(H₂).
inline bool antitonicity_check(const LinearRelation& h1, const LinearRelation& h2,
                               const Tolerance& tol = default_tolerance()) {
  detail::require_same_space(h1, h2);
  require(classify(h1, tol).selfadjoint && classify(h2, tol).selfadjoint, ErrorKind::PreconditionViolated,
          "both relations must be selfadjoint");
  require(relation_leq(h1, h2, tol), ErrorKind::PreconditionViolated, "requires H₁ ≤ H₂");
  bool holds = relation_leq(inverse(h2), inverse(h1), tol);
  bool same = relation_inertia(h1, tol).n_minus == relation_inertia(h2, tol).n_minus;
  require(holds == same, ErrorKind::AssertionFailed, "inverse order disagrees with the inertia test");
  return holds;
}

// ---- uniqueness ----

// Â = (I + A)^{-*} A_s (I + A)^{-1} compressed to 𝔥₁.
inline SymmetricMatrix a_hat(const KreinData& kd) {
  DenseMatrix rr = kd.r * kd.u1;
  DenseMatrix fp = kd.u1 - rr;  // f′ = g − f
  return SymmetricMatrix(DenseMatrix(rr.transpose() * fp));
}

// Worst residual of (T₁g, φ) = 2((I + A)^{-1}g, φ) for φ ⊥ 𝔥₁ and of
// ((I − T₁ᵀT₁)g, g) = 4(Âg, g), over the given coefficient vectors g = U₁c.
inline double translation_residual(const KreinData& kd, const DenseMatrix& coeffs) {
  require_dims(coeffs.rows() == kd.u1.cols(), "probe coefficients must live on 𝔥₁");
  DenseMatrix g = kd.u1 * coeffs;
  DenseMatrix cross = kd.u2.transpose() * (kd.t1 - 2.0 * kd.r) * g;
  SymmetricMatrix ah = a_hat(kd);
  double worst = 0.0;
  for (Index j = 0; j < g.cols(); ++j) {
    Vector gj = g.col(j);
    Vector tg = kd.t1 * gj;
    double lhs = gj.squaredNorm() - tg.squaredNorm();
    double rhs = 4.0 * coeffs.col(j).dot(ah.matrix() * coeffs.col(j));
    double scale = 1.0 + gj.squaredNorm() * (1.0 + kd.t1.norm() * kd.t1.norm());
    worst = std::max(worst, std::abs(lhs - rhs) / scale);
    if (cross.size()) worst = std::max(worst, cross.col(j).norm() / (1.0 + gj.norm()));
  }
  return worst;
}

struct UniquenessReport {
  bool gap_zero = false;      // T_M = T_m
  bool rank_test = false;     // J-isometry of Vᵀ by the defect rank criterion
  bool equal_extremes = false;  // A_F = A_K as relations
  double translation = 0.0;
  bool agree() const { return gap_zero == rank_test && rank_test == equal_extremes; }
};

inline UniquenessReport uniqueness_report(const KreinData& kd, const Tolerance& tol = default_tolerance(),
                                          std::uint64_t probe_seed = 0) {
  UniquenessReport u;
  SymmetricMatrix gap = uniqueness_gap(kd.pair, tol);
  u.gap_zero = gap.norm() <= tol.residual * (1.0 + gram_scale(kd.pair.v));
  Index n2 = kd.pair.col.n2();
  if (n2 == 0) {
    u.rank_test = true;
  } else {
    JContractionData vd =
        defect_data(kd.pair.v.transpose(), JSpace::identity(n2), JSpace(kd.pair.j, tol), tol);
    u.rank_test = j_isometry_test(vd, tol).defect_test;
  }
  u.equal_extremes = same_relation(kd.a_f, kd.a_k, tol);

  Index k1 = kd.u1.cols();
  std::mt19937_64 rng(probe_seed);
  std::normal_distribution<double> nd;
  DenseMatrix probes(k1, 4);
  for (Index i = 0; i < probes.size(); ++i) probes.data()[i] = nd(rng);
  u.translation = k1 ? translation_residual(kd, probes) : 0.0;
  return u;
}

inline bool krein_uniqueness_relation(const LinearRelation& a, const Tolerance& tol = default_tolerance()) {
  KreinData kd = krein_data(a, tol);
  UniquenessReport u = uniqueness_report(kd, tol);
  require(u.agree(), ErrorKind::AssertionFailed, "uniqueness criteria disagree");
  if (u.translation > tol.residual)
    fail(ErrorKind::AssertionFailed, "translation identities fail", u.translation);
  return u.equal_extremes;
}

}  // namespace kreinkit
