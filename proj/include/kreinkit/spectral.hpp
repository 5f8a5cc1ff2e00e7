#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include "kreinkit/error.hpp"
#include "kreinkit/tolerance.hpp"

namespace kreinkit {

using DenseMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool all_finite(const DenseMatrix& m) { return m.allFinite(); }

// Spectral (operator 2-) norm.
inline double norm2(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<DenseMatrix> svd(m);
  return svd.singularValues()(0);
}

inline void require_dims(bool cond, const char* what) {
  require(cond, ErrorKind::DimensionMismatch, what);
}

class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;

  // Symmetrizes (A + Aᵀ)/2.
  explicit SymmetricMatrix(const DenseMatrix& a) {
    require_dims(a.rows() == a.cols(), "symmetric matrix must be square");
    require(all_finite(a), ErrorKind::InvalidInput, "matrix has non-finite entries");
    m_ = 0.5 * (a + a.transpose());
  }

  // Rejects input whose asymmetry exceeds tol relative to its largest entry.
  static SymmetricMatrix checked(const DenseMatrix& a, double tol) {
    require_dims(a.rows() == a.cols(), "symmetric matrix must be square");
    require(all_finite(a), ErrorKind::InvalidInput, "matrix has non-finite entries");
    double scale = a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
    double asym = a.size() ? (a - a.transpose()).cwiseAbs().maxCoeff() : 0.0;
    require(asym <= tol * (1.0 + scale), ErrorKind::NotSymmetric, "matrix is not symmetric");
    return SymmetricMatrix(a);
  }

  static SymmetricMatrix identity(Index n) { return SymmetricMatrix(DenseMatrix::Identity(n, n)); }
  static SymmetricMatrix zero(Index n) { return SymmetricMatrix(DenseMatrix::Zero(n, n)); }
  static SymmetricMatrix diagonal(const Vector& d) {
    return SymmetricMatrix(DenseMatrix(d.asDiagonal()));
  }

  Index dim() const { return m_.rows(); }
  const DenseMatrix& matrix() const { return m_; }
  double operator()(Index i, Index j) const { return m_(i, j); }
  double norm() const { return norm2(m_); }

  friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    require_dims(a.dim() == b.dim(), "dimension mismatch in sum");
    return SymmetricMatrix(DenseMatrix(a.m_ + b.m_));
  }
  friend SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    require_dims(a.dim() == b.dim(), "dimension mismatch in difference");
    return SymmetricMatrix(DenseMatrix(a.m_ - b.m_));
  }
  friend SymmetricMatrix operator-(const SymmetricMatrix& a) { return SymmetricMatrix(DenseMatrix(-a.m_)); }
  friend SymmetricMatrix operator*(double c, const SymmetricMatrix& a) {
    return SymmetricMatrix(DenseMatrix(c * a.m_));
  }

 private:
  DenseMatrix m_;
};

// Bᵀ·A·B
inline SymmetricMatrix congruence(const DenseMatrix& b, const SymmetricMatrix& a) {
  require_dims(b.rows() == a.dim(), "congruence dimension mismatch");
  return SymmetricMatrix(DenseMatrix(b.transpose() * a.matrix() * b));
}

inline SymmetricMatrix direct_sum(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  DenseMatrix m = DenseMatrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  m.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  m.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return SymmetricMatrix(m);
}

struct Inertia {
  Index n_plus = 0;
  Index n_minus = 0;
  Index n_zero = 0;
  Index n_inf = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Inertia& i) {
  return os << "(" << i.n_plus << "," << i.n_minus << "," << i.n_zero << "," << i.n_inf << ")";
}

struct SpectralDecomposition {
  Vector eigenvalues;      // ascending
  DenseMatrix eigenvectors;
};

inline SpectralDecomposition spectral_decompose(const SymmetricMatrix& a) {
  SpectralDecomposition sd;
  if (a.dim() == 0) {
    sd.eigenvalues = Vector(0);
    sd.eigenvectors = DenseMatrix(0, 0);
    return sd;
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(a.matrix());
  if (es.info() != Eigen::Success) fail(ErrorKind::NonConvergence, "eigensolver did not converge");
  sd.eigenvalues = es.eigenvalues();
  sd.eigenvectors = es.eigenvectors();
  return sd;
}

// Eigendecomposition plus the zero classification shared by every derived quantity.
class Spectrum {
 public:
  Spectrum() = default;

  // `scale` is the magnitude of the terms A was computed from; for a difference such
  // as J1 − TᵀJ2T roundoff is relative to 1 + ||T||², not to ||A||.
  explicit Spectrum(const SymmetricMatrix& a, const Tolerance& tol = default_tolerance(), double scale = 0.0)
      : sd_(spectral_decompose(a)) {
    Index n = a.dim();
    norm_ = n ? sd_.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    scale_ = std::max(norm_, scale);
    threshold_ = tol.zero * static_cast<double>(n) * scale_;
  }

  Index dim() const { return sd_.eigenvalues.size(); }
  const Vector& values() const { return sd_.eigenvalues; }
  const DenseMatrix& vectors() const { return sd_.eigenvectors; }
  const SpectralDecomposition& decomposition() const { return sd_; }
  double norm() const { return norm_; }
  double scale() const { return scale_; }
  double threshold() const { return threshold_; }

  // -1, 0 or +1
  int sign_class(Index i) const {
    double l = sd_.eigenvalues(i);
    if (l > threshold_) return 1;
    if (l < -threshold_) return -1;
    return 0;
  }

  Inertia inertia() const {
    Inertia in;
    for (Index i = 0; i < dim(); ++i) {
      switch (sign_class(i)) {
        case 1: ++in.n_plus; break;
        case -1: ++in.n_minus; break;
        default: ++in.n_zero; break;
      }
    }
    return in;
  }

  Index rank() const {
    Inertia in = inertia();
    return in.n_plus + in.n_minus;
  }

  // V·diag(f(λ, class))·Vᵀ
  template <class F>
  SymmetricMatrix apply(F f) const {
    Vector d(dim());
    for (Index i = 0; i < dim(); ++i) d(i) = f(sd_.eigenvalues(i), sign_class(i));
    return SymmetricMatrix(DenseMatrix(sd_.eigenvectors * d.asDiagonal() * sd_.eigenvectors.transpose()));
  }

  // |A|^p with classified-zero eigenvalues set to exactly 0.
  SymmetricMatrix modulus_power(double p) const {
    return apply([p](double l, int c) { return c == 0 ? 0.0 : std::pow(std::abs(l), p); });
  }

  SymmetricMatrix pinv_power(double p) const {
    return apply([p](double l, int c) { return c == 0 ? 0.0 : std::pow(std::abs(l), -p); });
  }

  // Signed Moore–Penrose inverse of A itself.
  SymmetricMatrix pinv() const {
    return apply([](double l, int c) { return c == 0 ? 0.0 : 1.0 / l; });
  }

  SymmetricMatrix signature() const {
    return apply([](double, int c) { return c < 0 ? -1.0 : 1.0; });
  }

  // Signature restricted to the range: 0 on the kernel.
  SymmetricMatrix compressed_signature() const {
    return apply([](double, int c) { return static_cast<double>(c); });
  }

  SymmetricMatrix range_projector() const {
    return apply([](double, int c) { return c == 0 ? 0.0 : 1.0; });
  }

  DenseMatrix basis_where(int cls_mask_plus, int cls_mask_minus, int cls_mask_zero) const {
    Index count = 0;
    for (Index i = 0; i < dim(); ++i) count += selected(i, cls_mask_plus, cls_mask_minus, cls_mask_zero);
    DenseMatrix b(dim(), count);
    Index k = 0;
    for (Index i = 0; i < dim(); ++i)
      if (selected(i, cls_mask_plus, cls_mask_minus, cls_mask_zero)) b.col(k++) = sd_.eigenvectors.col(i);
    return b;
  }

  DenseMatrix range_basis() const { return basis_where(1, 1, 0); }
  DenseMatrix kernel_basis() const { return basis_where(0, 0, 1); }
  DenseMatrix positive_basis() const { return basis_where(1, 0, 0); }
  DenseMatrix negative_basis() const { return basis_where(0, 1, 0); }

 private:
  bool selected(Index i, int p, int m, int z) const {
    int c = sign_class(i);
    return (c == 1 && p) || (c == -1 && m) || (c == 0 && z);
  }

  SpectralDecomposition sd_;
  double norm_ = 0.0;
  double scale_ = 0.0;
  double threshold_ = 0.0;
};

inline Inertia inertia_of(const SymmetricMatrix& a, const Tolerance& tol = default_tolerance(),
                          double scale = 0.0) {
  return Spectrum(a, tol, scale).inertia();
}

inline SymmetricMatrix signature_of(const SymmetricMatrix& a, const Tolerance& tol = default_tolerance()) {
  return Spectrum(a, tol).signature();
}

// Raw V·diag(|λ|^p)·Vᵀ; no zero classification.
inline SymmetricMatrix modulus_power(const SymmetricMatrix& a, double p) {
  require(p >= 0.0, ErrorKind::InvalidInput, "modulus_power needs p >= 0");
  Spectrum s(a);
  return s.apply([p](double l, int) { return std::pow(std::abs(l), p); });
}

inline SymmetricMatrix moore_penrose_power(const SymmetricMatrix& a, double p,
                                           const Tolerance& tol = default_tolerance()) {
  require(p > 0.0, ErrorKind::InvalidInput, "moore_penrose_power needs p > 0");
  return Spectrum(a, tol).pinv_power(p);
}

struct RangeSolve {
  DenseMatrix s;
  double residual = 0.0;  // ||B - P·B||
  bool included = false;
};

// Solves |H|^p·S = B against the classified spectrum of H, with ran S inside ran H.
inline RangeSolve range_solve(const Spectrum& h, double p, const DenseMatrix& b, const Tolerance& tol) {
  require_dims(b.rows() == h.dim(), "range_factor: row count of B must equal dim of M");
  RangeSolve r;
  DenseMatrix pb = h.range_projector().matrix() * b;
  r.residual = norm2(b - pb);
  r.included = r.residual <= tol.residual * (1.0 + norm2(b));
  r.s = h.pinv_power(p).matrix() * b;
  return r;
}

inline std::optional<DenseMatrix> range_factor(const Spectrum& h, double p, const DenseMatrix& b,
                                               const Tolerance& tol = default_tolerance()) {
  RangeSolve r = range_solve(h, p, b, tol);
  if (!r.included) return std::nullopt;
  return r.s;
}

// S = M^{[-1]}·B when the columns of B lie in ran M.
inline std::optional<DenseMatrix> range_factor(const SymmetricMatrix& m, const DenseMatrix& b,
                                               const Tolerance& tol = default_tolerance()) {
  require_dims(b.rows() == m.dim(), "range_factor: row count of B must equal dim of M");
  Spectrum s(m, tol);
  DenseMatrix pb = s.range_projector().matrix() * b;
  if (norm2(b - pb) > tol.residual * (1.0 + norm2(b))) return std::nullopt;
  return DenseMatrix(s.pinv().matrix() * b);
}

inline double min_eigenvalue(const SymmetricMatrix& a) {
  if (a.dim() == 0) return 0.0;
  return spectral_decompose(a).eigenvalues(0);
}

// A ⪯ B
inline bool loewner_leq(const SymmetricMatrix& a, const SymmetricMatrix& b,
                        const Tolerance& tol = default_tolerance()) {
  require_dims(a.dim() == b.dim(), "loewner_leq dimension mismatch");
  return min_eigenvalue(b - a) >= -tol.psd * (1.0 + a.norm() + b.norm());
}

inline bool is_psd(const SymmetricMatrix& a, const Tolerance& tol = default_tolerance(), double scale = 0.0) {
  return min_eigenvalue(a) >= -tol.psd * (1.0 + std::max(a.norm(), scale));
}

inline bool is_psd(const Spectrum& s, const Tolerance& tol = default_tolerance()) {
  return s.dim() == 0 || s.values()(0) >= -tol.psd * (1.0 + s.scale());
}

// ||X - Y|| <= t·(1 + ||X|| + ||Y||)
inline bool close(const DenseMatrix& x, const DenseMatrix& y, double t) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  return norm2(x - y) <= t * (1.0 + norm2(x) + norm2(y));
}

inline double relative_residual(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.size() == 0 && y.size() == 0) return 0.0;
  return norm2(x - y) / (1.0 + norm2(x) + norm2(y));
}

// ---- subspaces (orthonormal column bases) ----

// `scale` plays the same role as in Spectrum: a floor for the magnitude the
// singular values are compared against.
inline double svd_threshold(const Vector& sv, Index rows, Index cols, const Tolerance& tol, double scale) {
  double smax = sv.size() ? sv(0) : 0.0;
  return tol.zero * static_cast<double>(std::max(rows, cols)) * std::max(smax, scale);
}

inline DenseMatrix orthonormal_range(const DenseMatrix& x, const Tolerance& tol = default_tolerance(),
                                     double scale = 0.0) {
  if (x.size() == 0) return DenseMatrix(x.rows(), 0);
  Eigen::JacobiSVD<DenseMatrix> svd(x, Eigen::ComputeThinU);
  const Vector& sv = svd.singularValues();
  double thr = svd_threshold(sv, x.rows(), x.cols(), tol, scale);
  Index r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return svd.matrixU().leftCols(r);
}

inline Index numerical_rank(const DenseMatrix& x, const Tolerance& tol = default_tolerance(), double scale = 0.0) {
  return orthonormal_range(x, tol, scale).cols();
}

inline DenseMatrix null_space(const DenseMatrix& x, const Tolerance& tol = default_tolerance(), double scale = 0.0) {
  Index n = x.cols();
  if (x.rows() == 0) return DenseMatrix::Identity(n, n);
  if (n == 0) return DenseMatrix(0, 0);
  Eigen::JacobiSVD<DenseMatrix> svd(x, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  double thr = svd_threshold(sv, x.rows(), x.cols(), tol, scale);
  Index r = 0;
  while (r < sv.size() && sv(r) > thr) ++r;
  return svd.matrixV().rightCols(n - r);
}

// Orthonormal basis of the orthogonal complement of span(Q), Q orthonormal.
inline DenseMatrix orthogonal_complement(const DenseMatrix& q) {
  Index n = q.rows();
  Index k = q.cols();
  if (k == 0) return DenseMatrix::Identity(n, n);
  Eigen::HouseholderQR<DenseMatrix> qr(q);
  DenseMatrix full = qr.householderQ() * DenseMatrix::Identity(n, n);
  return full.rightCols(n - k);
}

inline DenseMatrix projector(const DenseMatrix& q) { return q * q.transpose(); }

// ||P1 - P2||₂: sine of the largest principal angle for equal dimensions, 1 otherwise.
inline double subspace_distance(const DenseMatrix& q1, const DenseMatrix& q2) {
  require_dims(q1.rows() == q2.rows(), "subspace ambient dimension mismatch");
  return norm2(projector(q1) - projector(q2));
}

inline bool same_subspace(const DenseMatrix& q1, const DenseMatrix& q2, const Tolerance& tol) {
  return q1.cols() == q2.cols() && subspace_distance(q1, q2) <= tol.subspace;
}

// Vectors common to span(Q1) and span(Q2): null space of [Q1, −Q2], whose small
// singular values scale linearly with the principal angle.
inline DenseMatrix subspace_intersection(const DenseMatrix& q1, const DenseMatrix& q2,
                                         const Tolerance& tol = default_tolerance()) {
  require_dims(q1.rows() == q2.rows(), "subspace ambient dimension mismatch");
  Index n = q1.rows();
  if (q1.cols() == 0 || q2.cols() == 0) return DenseMatrix(n, 0);
  DenseMatrix m(n, q1.cols() + q2.cols());
  m << q1, -q2;
  Eigen::JacobiSVD<DenseMatrix> svd(m, Eigen::ComputeFullV);
  const Vector& sv = svd.singularValues();
  Index cols = m.cols();
  Index k = 0;
  for (Index i = 0; i < cols; ++i) {
    double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= tol.subspace) ++k;
  }
  if (k == 0) return DenseMatrix(n, 0);
  DenseMatrix c = svd.matrixV().rightCols(k).topRows(q1.cols());
  return orthonormal_range(q1 * c, tol);
}

}  // namespace kreinkit
