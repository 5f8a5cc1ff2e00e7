#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kreinkit/completion.hpp"
#include "kreinkit/relations.hpp"

namespace kreinkit {

// Deterministic sampler; one instance per random case.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double normal() { return normal_(eng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  Index integer(Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

  DenseMatrix gaussian(Index rows, Index cols) {
    DenseMatrix m(rows, cols);
    for (Index i = 0; i < m.size(); ++i) m.data()[i] = normal();
    return m;
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> normal_;
};

inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

inline DenseMatrix random_orthogonal(Rng& rng, Index n) {
  if (n == 0) return DenseMatrix(0, 0);
  Eigen::HouseholderQR<DenseMatrix> qr(rng.gaussian(n, n));
  DenseMatrix q = qr.householderQ() * DenseMatrix::Identity(n, n);
  DenseMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  return q;
}

// Q·diag(values)·Qᵀ with a Haar-random Q.
inline SymmetricMatrix random_with_spectrum(Rng& rng, const Vector& values) {
  DenseMatrix q = random_orthogonal(rng, values.size());
  return SymmetricMatrix(DenseMatrix(q * values.asDiagonal() * q.transpose()));
}

// Nonzero eigenvalue magnitudes drawn from [lo, hi].
inline SymmetricMatrix random_with_inertia(Rng& rng, Index plus, Index minus, Index zero, double lo = 0.5,
                                           double hi = 3.0) {
  Vector v(plus + minus + zero);
  Index k = 0;
  for (Index i = 0; i < plus; ++i) v(k++) = rng.uniform(lo, hi);
  for (Index i = 0; i < minus; ++i) v(k++) = -rng.uniform(lo, hi);
  for (Index i = 0; i < zero; ++i) v(k++) = 0.0;
  return random_with_spectrum(rng, v);
}

inline JSpace random_jspace(Rng& rng, Index n, Index minus) {
  Vector d = Vector::Ones(n);
  d.tail(minus).setConstant(-1.0);
  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  for (Index i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.integer(0, i)]);
  Vector s(n);
  for (Index i = 0; i < n; ++i) s(i) = d(perm[i]);
  return JSpace(SymmetricMatrix::diagonal(s));
}

// Cayley transform of a J-skew matrix: a J-unitary matrix close to the identity.
inline DenseMatrix random_j_unitary(Rng& rng, const SymmetricMatrix& j, double spread = 0.4) {
  Index n = j.dim();
  if (n == 0) return DenseMatrix(0, 0);
  DenseMatrix g = rng.gaussian(n, n);
  DenseMatrix a = spread * (g - g.transpose()) / 2.0;
  DenseMatrix k = j.matrix() * a;
  DenseMatrix id = DenseMatrix::Identity(n, n);
  return (id - k).partialPivLu().solve(id + k);
}

// Map from (𝔥, J_src) into the span of `target` carrying the signature of the
// basis columns (`target_plus` positive ones first) with J_src − GᵀJ_tgtG ⪰ 0.
// Positive directions are contracted, negative ones expanded; `isometric`
// makes both norms exactly one.
inline DenseMatrix random_j_contraction_into(Rng& rng, const JSpace& src, const DenseMatrix& target,
                                             Index target_plus, bool isometric = false) {
  Index n = src.dim(), p = target_plus, q = target.cols() - target_plus;
  Index sp = n - src.n_minus(), sm = src.n_minus();
  require(sm <= q, ErrorKind::InvalidInput, "source has more negative directions than the target");
  require(!isometric || sp <= p, ErrorKind::InvalidInput, "isometry needs enough positive target directions");

  // Canonical coordinates: source (sp | sm), target (p | q).
  DenseMatrix g = DenseMatrix::Zero(p + q, sp + sm);
  if (sp > 0 && p > 0) {
    DenseMatrix c = rng.gaussian(p, sp);
    if (isometric) {
      c = orthonormal_range(rng.gaussian(p, std::max(p, sp))).leftCols(sp);
    } else {
      c *= rng.uniform(0.2, 0.9) / std::max(norm2(c), 1e-12);
    }
    g.topLeftCorner(p, sp) = c;
  }
  if (sm > 0) {
    DenseMatrix e = orthonormal_range(rng.gaussian(q, q)).leftCols(sm);
    double stretch = isometric ? 1.0 : rng.uniform(1.1, 2.0);
    g.bottomRightCorner(q, sm) = stretch * e;
  }

  // Permutation from the canonical order of src back to its diagonal order.
  DenseMatrix perm = DenseMatrix::Zero(n, n);
  Index ip = 0, im = sp;
  for (Index i = 0; i < n; ++i) perm(src.matrix()(i, i) > 0 ? ip++ : im++, i) = 1.0;

  Vector tj(p + q);
  tj.head(p).setOnes();
  tj.tail(q).setConstant(-1.0);
  Vector sj(n);
  sj.head(sp).setOnes();
  sj.tail(sm).setConstant(-1.0);
  DenseMatrix u2 = random_j_unitary(rng, SymmetricMatrix::diagonal(tj));
  DenseMatrix u1 = random_j_unitary(rng, SymmetricMatrix::diagonal(sj));
  return target * u2 * g * u1 * perm;
}

// Every nonzero eigenvalue of the classified spectrum has modulus at least gap·max(1, ‖A‖).
inline bool well_separated(const Spectrum& s, double gap) {
  double bound = gap * std::max(1.0, s.norm());
  for (Index i = 0; i < s.dim(); ++i)
    if (s.sign_class(i) != 0 && std::abs(s.values()(i)) < bound) return false;
  return true;
}

inline bool well_separated(const SymmetricMatrix& a, double gap, const Tolerance& tol = default_tolerance()) {
  return well_separated(Spectrum(a, tol), gap);
}

// ---- completion ----

struct CompletionInstance {
  IncompleteBlock blk;
  Index kappa = 0;
};

inline CompletionInstance random_completion(Rng& rng, Index max_dim = 6) {
  Index n1 = rng.integer(1, max_dim), n2 = rng.integer(1, max_dim);
  Index minus = std::min<Index>(rng.integer(0, 2), n1);
  Index zero = n1 - minus > 1 && rng.coin(0.3) ? 1 : 0;
  Index plus = n1 - minus - zero;
  SymmetricMatrix a11 = random_with_inertia(rng, plus, minus, zero);
  DenseMatrix a12 = a11.matrix() * rng.gaussian(n1, n2) * 0.5;
  return {IncompleteBlock(a11, a12), minus};
}

// ---- J-contractions and liftings ----

struct LiftInstance {
  JContractionData data;
  JSpace j1p, j2p;
  LiftParameters params;
};

namespace detail {

inline bool defect_separated(const JContractionData& d, double gap) {
  return well_separated(d.gram_t, gap) && well_separated(d.gram_tstar, gap);
}

// Eigenbasis of a defect Gram restricted to its range, positive directions first.
inline std::pair<DenseMatrix, Index> signed_range_basis(const Spectrum& s) {
  DenseMatrix p = s.positive_basis(), m = s.negative_basis();
  DenseMatrix b(s.dim(), p.cols() + m.cols());
  b << p, m;
  return {b, p.cols()};
}

}  // namespace detail

inline std::optional<LiftInstance> try_random_lift(Rng& rng, Index max_dim = 4,
                                                   const Tolerance& tol = default_tolerance()) {
  Index n1 = rng.integer(1, max_dim), n2 = rng.integer(1, max_dim);
  JSpace j1 = random_jspace(rng, n1, rng.integer(0, n1));
  JSpace j2 = random_jspace(rng, n2, rng.integer(0, n2));
  DenseMatrix t = rng.gaussian(n2, n1) * rng.uniform(0.3, 1.5);
  LiftInstance li{defect_data(t, j1, j2, tol), JSpace(), JSpace(), {}};
  const JContractionData& d = li.data;
  if (!detail::defect_separated(d, 0.05)) return std::nullopt;

  auto [bt, pt] = detail::signed_range_basis(d.gram_t);
  auto [bts, pts] = detail::signed_range_basis(d.gram_tstar);
  Index m1 = rng.integer(1, max_dim), m2 = rng.integer(1, max_dim);
  li.j1p = random_jspace(rng, m1, rng.integer(0, std::min<Index>(m1, d.kappa2)));
  li.j2p = random_jspace(rng, m2, rng.integer(0, std::min<Index>(m2, d.kappa1)));

  // Γ₁: (𝔥₁′, J₁′) → (𝔇_{T*}, J_{T*}) and Γ₂ᵀ: (𝔥₂′, J₂′) → (𝔇_T, J_T).
  if (bts.cols() == 0) {
    li.params.gamma1 = DenseMatrix::Zero(n2, m1);
  } else {
    li.params.gamma1 = random_j_contraction_into(rng, li.j1p, bts, pts);
  }
  if (bt.cols() == 0) {
    li.params.gamma2 = DenseMatrix::Zero(m2, n1);
  } else {
    li.params.gamma2 = random_j_contraction_into(rng, li.j2p, bt, pt).transpose();
  }

  auto pd = detail::parameter_defects(d, li.params.gamma1, li.params.gamma2, li.j1p, li.j2p, tol);
  if (!well_separated(pd.g1, 0.05) || !well_separated(pd.g2s, 0.05)) return std::nullopt;
  if (!is_psd(pd.g1, tol) || !is_psd(pd.g2s, tol)) return std::nullopt;
  DenseMatrix c = rng.gaussian(m2, m1);
  c *= rng.uniform(0.0, 0.9) / std::max(norm2(c), 1e-12);
  li.params.gamma = pd.g2s.range_projector().matrix() * c * pd.g1.range_projector().matrix();
  return li;
}

constexpr int kMaxAttempts = 1000;

inline LiftInstance random_lift(Rng& rng, Index max_dim = 4, const Tolerance& tol = default_tolerance()) {
  for (int i = 0; i < kMaxAttempts; ++i)
    if (auto li = try_random_lift(rng, max_dim, tol)) return *li;
  fail(ErrorKind::NonConvergence, "no well-conditioned lifting instance found");
}

// A J-contraction T: (ℝ^{n1}, J1) → (ℝ^{n2}, J2) with kappa1 = 0.
struct JContractionInstance {
  DenseMatrix t;
  JSpace j1, j2;
};

inline JContractionInstance random_j_contraction(Rng& rng, Index max_dim = 4, bool isometric = false) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Index n1 = rng.integer(1, max_dim), n2 = rng.integer(1, max_dim);
    Index m1 = rng.integer(0, n1), m2 = rng.integer(0, n2);
    if (m1 > m2) continue;
    if (isometric && n1 - m1 > n2 - m2) continue;
    JSpace j1 = random_jspace(rng, n1, m1), j2 = random_jspace(rng, n2, m2);
    // Canonical target basis ordered by sign.
    DenseMatrix basis = DenseMatrix::Zero(n2, n2);
    Index c = 0;
    for (Index i = 0; i < n2; ++i)
      if (j2.matrix()(i, i) > 0) basis(i, c++) = 1.0;
    for (Index i = 0; i < n2; ++i)
      if (j2.matrix()(i, i) < 0) basis(i, c++) = 1.0;
    DenseMatrix t = random_j_contraction_into(rng, j1, basis, n2 - m2, isometric);
    return {t, j1, j2};
  }
  fail(ErrorKind::NonConvergence, "no admissible signature pair found");
}

// ---- quasi-contractive columns ----

struct ColumnSpec {
  bool unique = false;     // I − VJVᵀ = 0
  bool solvable = true;
};

// T11 with eigenvalues away from ±1, T21 = V·D_{T11} with V shaped by ColumnSpec.
inline std::optional<SymmetricColumn> try_random_column(Rng& rng, Index n1, Index n2, ColumnSpec spec) {
  Index outside = std::min<Index>(rng.integer(0, 2), n1);
  Vector lam(n1);
  for (Index i = 0; i < n1; ++i) {
    double mag = i < outside ? rng.uniform(1.3, 3.0) : rng.uniform(0.0, 0.8);
    lam(i) = rng.coin() ? mag : -mag;
  }
  Index p = n1 - outside, q = outside;  // positive / negative directions of J
  if (spec.unique && p < n2) return std::nullopt;
  if (!spec.solvable && (p == 0 || n2 == 0)) return std::nullopt;

  // V in the eigenbasis with the inside eigenvalues first.
  DenseMatrix vp = DenseMatrix::Zero(n2, p), vm = DenseMatrix::Zero(n2, q);
  if (q > 0 && rng.coin(0.7)) vm = rng.gaussian(n2, q) * rng.uniform(0.2, 1.0);
  if (spec.unique) {
    DenseMatrix z = orthonormal_range(rng.gaussian(p, p)).leftCols(n2).transpose();
    SymmetricMatrix root = modulus_power(SymmetricMatrix(DenseMatrix(
                                             DenseMatrix::Identity(n2, n2) + vm * vm.transpose())),
                                         0.5);
    vp = root.matrix() * z;
  } else if (p > 0) {
    vp = rng.gaussian(n2, p);
    double target = spec.solvable ? rng.uniform(0.0, 0.9) : rng.uniform(1.3, 2.0);
    if (!spec.solvable) vm.setZero();
    if (spec.solvable && rng.coin(0.15)) target = 0.0;
    vp *= target / std::max(norm2(vp), 1e-12);
  }

  Vector d(n1);
  Index ip = 0, iq = p;
  DenseMatrix v(n2, n1);
  for (Index i = 0; i < n1; ++i) {
    d(i) = std::sqrt(std::abs(1.0 - lam(i) * lam(i)));
    if (i < outside) {
      v.col(i) = vm.col(iq++ - p);
    } else {
      v.col(i) = vp.col(ip++);
    }
  }
  DenseMatrix qm = random_orthogonal(rng, n1);
  SymmetricMatrix t11(DenseMatrix(qm * lam.asDiagonal() * qm.transpose()));
  DenseMatrix t21 = v * d.asDiagonal() * qm.transpose();
  return SymmetricColumn(t11, t21);
}

inline SymmetricColumn random_column(Rng& rng, Index n1, Index n2, ColumnSpec spec = {}) {
  for (int i = 0; i < kMaxAttempts; ++i)
    if (auto c = try_random_column(rng, n1, n2, spec)) return *c;
  fail(ErrorKind::NonConvergence, "no column with the requested shape found");
}

// ---- relations ----

// Symmetric relation whose Cayley transform is the column rotated by an orthogonal W.
inline LinearRelation relation_from_column(Rng& rng, const SymmetricColumn& col,
                                           const Tolerance& tol = default_tolerance()) {
  Index n = col.n1() + col.n2();
  DenseMatrix w = random_orthogonal(rng, n);
  DenseMatrix f = w.leftCols(col.n1());
  DenseMatrix fp = w * col.column();
  return cayley(LinearRelation::from_generators(f, fp, tol));
}

// Selfadjoint relation with operator part spectrum `values` and `mul` multivalued directions.
inline LinearRelation random_selfadjoint_relation(Rng& rng, const Vector& values, Index mul,
                                                  const Tolerance& tol = default_tolerance()) {
  Index r = values.size(), n = r + mul;
  DenseMatrix w = random_orthogonal(rng, n);
  DenseMatrix f = DenseMatrix::Zero(n, n), fp = DenseMatrix::Zero(n, n);
  f.leftCols(r) = w.leftCols(r);
  fp.leftCols(r) = w.leftCols(r) * values.asDiagonal();
  fp.rightCols(mul) = w.rightCols(mul);
  return LinearRelation::from_generators(f, fp, tol);
}

// H = a + R^{-1} for a resolvent R ⪰ 0, with mul H = ker R.
inline LinearRelation relation_from_resolvent(const SymmetricMatrix& r, double a,
                                              const Tolerance& tol = default_tolerance()) {
  Index n = r.dim();
  DenseMatrix fp = DenseMatrix::Identity(n, n) + a * r.matrix();
  return LinearRelation::from_generators(r.matrix(), fp, tol);
}

}  // namespace kreinkit
