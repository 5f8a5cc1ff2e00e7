#pragma once

#include <optional>
#include <vector>

#include "kreinkit/spectral.hpp"

namespace kreinkit {

// Finite-dimensional space with a fundamental symmetry J = Jᵀ = J⁻¹.
class JSpace {
 public:
  JSpace() = default;

  explicit JSpace(const SymmetricMatrix& j, const Tolerance& tol = default_tolerance()) : j_(j) {
    DenseMatrix sq = j.matrix() * j.matrix();
    DenseMatrix id = DenseMatrix::Identity(j.dim(), j.dim());
    require(j.dim() == 0 || norm2(sq - id) <= tol.residual * (1.0 + j.norm()),
            ErrorKind::InvalidInput, "J must be an involution");
    n_minus_ = Spectrum(j, tol).inertia().n_minus;
  }

  static JSpace identity(Index n) { return JSpace(SymmetricMatrix::identity(n)); }

  // diag(+1 × plus, −1 × minus)
  static JSpace canonical(Index plus, Index minus) {
    Vector d(plus + minus);
    d.head(plus).setOnes();
    d.tail(minus).setConstant(-1.0);
    return JSpace(SymmetricMatrix::diagonal(d));
  }

  Index dim() const { return j_.dim(); }
  Index n_minus() const { return n_minus_; }
  const SymmetricMatrix& j() const { return j_; }
  const DenseMatrix& matrix() const { return j_.matrix(); }

 private:
  SymmetricMatrix j_;
  Index n_minus_ = 0;
};

inline JSpace direct_sum(const JSpace& a, const JSpace& b) { return JSpace(direct_sum(a.j(), b.j())); }

enum class JClass { none, contractive, bicontractive, isometric, unitary };

inline const char* to_string(JClass c) {
  switch (c) {
    case JClass::none: return "none";
    case JClass::contractive: return "contractive";
    case JClass::bicontractive: return "bicontractive";
    case JClass::isometric: return "isometric";
    case JClass::unitary: return "unitary";
  }
  return "none";
}

struct JFactorResult {
  DenseMatrix factor;
  SymmetricMatrix defect_gram;
  JClass classification = JClass::none;
};

struct InertiaBalance {
  Inertia left;   // inertia of J1 − TᵀJ2T
  Inertia right;  // inertia of J2 − TJ1Tᵀ
};

// Magnitude of the terms in J_dom − TᵀJ_cod·T, used as the zero-classification scale.
inline double gram_scale(const DenseMatrix& t) {
  double n = norm2(t);
  return 1.0 + n * n;
}

inline SymmetricMatrix j_gram(const DenseMatrix& t, const SymmetricMatrix& j_dom, const SymmetricMatrix& j_cod) {
  return j_dom - congruence(t, j_cod);
}

inline SymmetricMatrix j_gram_star(const DenseMatrix& t, const SymmetricMatrix& j_dom, const SymmetricMatrix& j_cod) {
  return j_cod - congruence(t.transpose(), j_dom);
}

inline InertiaBalance inertia_balance(const DenseMatrix& t, const JSpace& j1, const JSpace& j2,
                                      const Tolerance& tol = default_tolerance()) {
  require_dims(t.cols() == j1.dim() && t.rows() == j2.dim(), "T must map the j1-space into the j2-space");
  InertiaBalance b;
  double sc = gram_scale(t);
  b.left = inertia_of(j_gram(t, j1.j(), j2.j()), tol, sc);
  b.right = inertia_of(j_gram_star(t, j1.j(), j2.j()), tol, sc);
  Inertia i1 = inertia_of(j1.j(), tol), i2 = inertia_of(j2.j(), tol);
  bool ok = b.left.n_minus + i2.n_minus == b.right.n_minus + i1.n_minus &&
            b.left.n_plus + i2.n_plus == b.right.n_plus + i1.n_plus && b.left.n_zero == b.right.n_zero;
  require(ok, ErrorKind::AssertionFailed, "inertia balance identities violated");
  return b;
}

namespace detail {

// J_dom − Cᵀ J_cod C and J_cod − C J_dom Cᵀ, classified.
inline JClass classify_j_operator(const DenseMatrix& c, const SymmetricMatrix& j_dom, const SymmetricMatrix& j_cod,
                                  const Tolerance& tol) {
  SymmetricMatrix g = j_gram(c, j_dom, j_cod);
  double scale = gram_scale(c);
  if (g.norm() <= tol.residual * scale) return JClass::isometric;
  if (!is_psd(g, tol, scale)) return JClass::none;
  if (is_psd(j_gram_star(c, j_dom, j_cod), tol, scale)) return JClass::bicontractive;
  return JClass::contractive;
}

}  // namespace detail

// Factor Bᵀ = |A|^{1/2} K with K a J-contraction when the negative indices balance.
inline std::optional<JFactorResult> schur_negativity_factor(const SymmetricMatrix& a, const DenseMatrix& b,
                                                            const JSpace& j2,
                                                            const Tolerance& tol = default_tolerance()) {
  require_dims(b.cols() == a.dim() && b.rows() == j2.dim(), "B must map the A-space into the j2-space");
  Spectrum sa(a, tol);
  Index lhs = sa.inertia().n_minus;
  Index rhs = inertia_of(a - congruence(b, j2.j()), tol, a.norm() + gram_scale(b)).n_minus + j2.n_minus();
  if (lhs != rhs) return std::nullopt;

  auto k = range_factor(sa, 0.5, b.transpose(), tol);
  require(k.has_value(), ErrorKind::AssertionFailed, "index balance holds but ran Bᵀ escapes ran |A|^{1/2}");
  SymmetricMatrix ja = sa.compressed_signature();
  JFactorResult r;
  r.factor = *k;
  r.defect_gram = j_gram(*k, j2.j(), ja);
  r.classification = detail::classify_j_operator(*k, j2.j(), ja, tol);
  require(r.classification != JClass::none, ErrorKind::AssertionFailed, "factor K is not J-contractive");
  return r;
}

enum class DouglasMode { inequality, equality };

// B = C |A|^{1/2} with C vanishing on ker A.
inline std::optional<JFactorResult> douglas_factor(const SymmetricMatrix& a, const DenseMatrix& b, const JSpace& j2,
                                                   DouglasMode mode, const Tolerance& tol = default_tolerance()) {
  require_dims(b.cols() == a.dim() && b.rows() == j2.dim(), "B must map the A-space into the j2-space");
  Spectrum sa(a, tol);
  require(sa.inertia().n_minus == j2.n_minus(), ErrorKind::HypothesisViolated, "requires ν₋(A) = ν₋(J2)");

  SymmetricMatrix bjb = congruence(b, j2.j());
  if (mode == DouglasMode::inequality) {
    if (!loewner_leq(bjb, a, tol)) return std::nullopt;
  } else {
    double scale = 1.0 + a.norm() + norm2(b) * norm2(b);
    if ((a - bjb).norm() > tol.residual * scale) return std::nullopt;
  }

  auto ct = range_factor(sa, 0.5, b.transpose(), tol);
  if (!ct) return std::nullopt;
  DenseMatrix c = ct->transpose();
  SymmetricMatrix ja = sa.compressed_signature();

  JFactorResult r;
  r.factor = c;
  r.defect_gram = j_gram(c, ja, j2.j());
  if (mode == DouglasMode::inequality) {
    double sc = gram_scale(c);
    bool bi = is_psd(r.defect_gram, tol, sc) && is_psd(j_gram_star(c, ja, j2.j()), tol, sc);
    require(bi, ErrorKind::AssertionFailed, "Douglas factor is not J-bicontractive");
    r.classification = JClass::bicontractive;
  } else {
    bool iso = r.defect_gram.norm() <= tol.residual * gram_scale(c);
    require(iso, ErrorKind::AssertionFailed, "Douglas factor is not J-isometric");
    r.classification = numerical_rank(b, tol) == j2.dim() ? JClass::unitary : JClass::isometric;
  }
  return r;
}

struct BicontractionCase {
  enum Which { neither, inequality, equality };
  Which which = neither;
  std::optional<DenseMatrix> witness;
  JClass classification = JClass::none;
};

inline BicontractionCase bicontraction_classify(const SymmetricMatrix& a, const DenseMatrix& b, const JSpace& j2,
                                                const Tolerance& tol = default_tolerance()) {
  BicontractionCase out;
  if (inertia_of(a, tol).n_minus != j2.n_minus()) return out;
  if (auto eq = douglas_factor(a, b, j2, DouglasMode::equality, tol)) {
    out.which = BicontractionCase::equality;
    out.witness = eq->factor;
    out.classification = eq->classification;
    return out;
  }
  if (auto in = douglas_factor(a, b, j2, DouglasMode::inequality, tol)) {
    out.which = BicontractionCase::inequality;
    out.witness = in->factor;
    out.classification = in->classification;
  }
  return out;
}

}  // namespace kreinkit
