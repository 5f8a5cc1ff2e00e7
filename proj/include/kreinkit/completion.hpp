#pragma once

#include "kreinkit/spectral.hpp"

namespace kreinkit {

// Symmetric 2×2 block with the (2,2) corner unknown.
struct IncompleteBlock {
  SymmetricMatrix a11;
  DenseMatrix a12;

  IncompleteBlock() = default;
  IncompleteBlock(SymmetricMatrix a11_, DenseMatrix a12_) : a11(std::move(a11_)), a12(std::move(a12_)) {
    require_dims(a12.rows() == a11.dim(), "a12 must have as many rows as a11");
    require(all_finite(a12), ErrorKind::InvalidInput, "a12 has non-finite entries");
  }

  Index n1() const { return a11.dim(); }
  Index n2() const { return a12.cols(); }
};

struct CompletionSolution {
  DenseMatrix s;              // |A11|^{[-1/2]} A12, range inside ran A11
  SymmetricMatrix j;          // sign(A11), kernel signed +1
  SymmetricMatrix a22_min;    // Sᵀ J S
  Index kappa = 0;            // ν₋(A11)
  double residual = 0.0;      // ||A12 - |A11|^{1/2} S||
};

namespace detail {

inline RangeSolve completion_factor(const IncompleteBlock& blk, const Spectrum& s11, const Tolerance& tol) {
  return range_solve(s11, 0.5, blk.a12, tol);
}

}  // namespace detail

inline bool completable(const IncompleteBlock& blk, const Tolerance& tol = default_tolerance()) {
  Spectrum s11(blk.a11, tol);
  return detail::completion_factor(blk, s11, tol).included;
}

inline CompletionSolution minimal_completion(const IncompleteBlock& blk, const Tolerance& tol = default_tolerance()) {
  Spectrum s11(blk.a11, tol);
  RangeSolve r = detail::completion_factor(blk, s11, tol);
  if (!r.included)
    fail(ErrorKind::NotCompletable, "ran A12 is not contained in ran |A11|^{1/2}", r.residual);
  CompletionSolution sol;
  sol.s = r.s;
  sol.j = s11.signature();
  sol.a22_min = congruence(sol.s, sol.j);
  sol.kappa = s11.inertia().n_minus;
  sol.residual = norm2(s11.modulus_power(0.5).matrix() * sol.s - blk.a12);
  return sol;
}

inline SymmetricMatrix assemble(const IncompleteBlock& blk, const SymmetricMatrix& a22) {
  require_dims(a22.dim() == blk.n2(), "a22 dimension must equal the column count of a12");
  Index n1 = blk.n1(), n2 = blk.n2();
  DenseMatrix m(n1 + n2, n1 + n2);
  m.topLeftCorner(n1, n1) = blk.a11.matrix();
  m.topRightCorner(n1, n2) = blk.a12;
  m.bottomLeftCorner(n2, n1) = blk.a12.transpose();
  m.bottomRightCorner(n2, n2) = a22.matrix();
  return SymmetricMatrix(m);
}

inline bool is_solution(const IncompleteBlock& blk, const SymmetricMatrix& a22,
                        const Tolerance& tol = default_tolerance()) {
  require_dims(a22.dim() == blk.n2(), "a22 dimension must equal the column count of a12");
  return loewner_leq(minimal_completion(blk, tol).a22_min, a22, tol);
}

// Inertia of the assembled block through the generalized Schur complement a22 − SᵀJS.
inline Inertia schur_inertia(const IncompleteBlock& blk, const SymmetricMatrix& a22,
                             const Tolerance& tol = default_tolerance()) {
  require_dims(a22.dim() == blk.n2(), "a22 dimension must equal the column count of a12");
  CompletionSolution sol = minimal_completion(blk, tol);
  Inertia i11 = inertia_of(blk.a11, tol);
  Inertia isc = inertia_of(a22 - sol.a22_min, tol, a22.norm() + sol.a22_min.norm());
  Inertia out;
  out.n_plus = i11.n_plus + isc.n_plus;
  out.n_minus = i11.n_minus + isc.n_minus;
  out.n_zero = blk.n1() + blk.n2() - out.n_plus - out.n_minus;
  return out;
}

}  // namespace kreinkit
