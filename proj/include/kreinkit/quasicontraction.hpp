#pragma once

#include <utility>

#include "kreinkit/lifting.hpp"

namespace kreinkit {

// T₁ = [T11; T21]: 𝔥₁ → 𝔥₁ ⊕ 𝔥₂ with T11 symmetric.
struct SymmetricColumn {
  SymmetricMatrix t11;
  DenseMatrix t21;

  SymmetricColumn() = default;
  SymmetricColumn(SymmetricMatrix t11_, DenseMatrix t21_) : t11(std::move(t11_)), t21(std::move(t21_)) {
    require_dims(t21.cols() == t11.dim(), "t21 must have as many columns as t11");
    require(all_finite(t21), ErrorKind::InvalidInput, "t21 has non-finite entries");
  }

  Index n1() const { return t11.dim(); }
  Index n2() const { return t21.rows(); }

  DenseMatrix column() const {
    DenseMatrix c(n1() + n2(), n1());
    c << t11.matrix(), t21;
    return c;
  }

  SymmetricColumn negated() const { return SymmetricColumn(-t11, -t21); }
};

struct ExtremalPair {
  SymmetricColumn col;
  SymmetricMatrix t_m, t_M;
  DenseMatrix v;          // T21 = V·D_{T11}, ker V ⊃ ker D_{T11}
  SymmetricMatrix d;      // |I − T11²|^{1/2}
  SymmetricMatrix j;      // sign(I − T11²)
  Index kappa = 0;        // ν₋(I − T11²)
  Index kappa_plus = 0;   // ν₋(I − T11): eigenvalues in (1, ∞)
  Index kappa_minus = 0;  // ν₋(I + T11): eigenvalues in (−∞, −1)
};

namespace detail {

inline SymmetricMatrix shifted(const SymmetricMatrix& t, double sign) {
  return SymmetricMatrix::identity(t.dim()) + sign * t;
}

inline Index minus_of_identity_minus_square(const SymmetricMatrix& t, const Tolerance& tol) {
  DenseMatrix sq = t.matrix() * t.matrix();
  return inertia_of(SymmetricMatrix(DenseMatrix(DenseMatrix::Identity(t.dim(), t.dim()) - sq)), tol,
                    1.0 + t.norm() * t.norm())
      .n_minus;
}

}  // namespace detail

// (ν₋(I+T), ν₋(I−T)); their sum equals ν₋(I − T²).
inline std::pair<Index, Index> split_counts(const SymmetricMatrix& t, const Tolerance& tol = default_tolerance()) {
  double sc = 1.0 + t.norm();
  Index plus = inertia_of(detail::shifted(t, 1.0), tol, sc).n_minus;
  Index minus = inertia_of(detail::shifted(t, -1.0), tol, sc).n_minus;
  require(plus + minus == detail::minus_of_identity_minus_square(t, tol), ErrorKind::AssertionFailed,
          "ν₋(I − T²) differs from ν₋(I + T) + ν₋(I − T)");
  return {plus, minus};
}

struct SolvabilityCounts {
  Index lhs = 0;  // ν₋(I − T11²)
  Index rhs = 0;  // ν₋(I − T₁ᵀT₁)
};

inline SolvabilityCounts solvability_counts(const SymmetricColumn& col, const Tolerance& tol = default_tolerance()) {
  SolvabilityCounts c;
  c.lhs = detail::minus_of_identity_minus_square(col.t11, tol);
  DenseMatrix t1 = col.column();
  SymmetricMatrix g(DenseMatrix(DenseMatrix::Identity(col.n1(), col.n1()) - t1.transpose() * t1));
  c.rhs = inertia_of(g, tol, gram_scale(t1)).n_minus;
  return c;
}

inline bool solvable(const SymmetricColumn& col, const Tolerance& tol = default_tolerance()) {
  SolvabilityCounts c = solvability_counts(col, tol);
  return c.lhs == c.rhs;
}

namespace detail {

inline ExtremalPair build_extremal(const SymmetricColumn& col, const Tolerance& tol) {
  Index n1 = col.n1(), n2 = col.n2();
  const DenseMatrix& t11 = col.t11.matrix();
  DenseMatrix i1 = DenseMatrix::Identity(n1, n1);
  DenseMatrix i2 = DenseMatrix::Identity(n2, n2);
  Spectrum sg(SymmetricMatrix(DenseMatrix(i1 - t11 * t11)), tol, 1.0 + col.t11.norm() * col.t11.norm());

  ExtremalPair p;
  p.col = col;
  p.d = sg.modulus_power(0.5);
  p.j = sg.signature();
  p.kappa = sg.inertia().n_minus;
  auto counts = split_counts(col.t11, tol);
  p.kappa_minus = counts.first;
  p.kappa_plus = counts.second;

  RangeSolve vt = range_solve(sg, 0.5, col.t21.transpose(), tol);
  if (!vt.included) fail(ErrorKind::AssertionFailed, "ran T21ᵀ escapes ran D_{T11}", vt.residual);
  p.v = vt.s.transpose();

  const DenseMatrix& j = p.j.matrix();
  DenseMatrix off = p.v * p.d.matrix();
  DenseMatrix lower_m = -i2 + p.v * (i1 - t11) * j * p.v.transpose();
  DenseMatrix lower_M = i2 - p.v * (i1 + t11) * j * p.v.transpose();

  DenseMatrix tm(n1 + n2, n1 + n2), tM(n1 + n2, n1 + n2);
  tm << t11, off.transpose(), off, lower_m;
  tM << t11, off.transpose(), off, lower_M;
  p.t_m = SymmetricMatrix(tm);
  p.t_M = SymmetricMatrix(tM);
  return p;
}

}  // namespace detail

inline ExtremalPair extremal_extensions(const SymmetricColumn& col, const Tolerance& tol = default_tolerance()) {
  SolvabilityCounts c = solvability_counts(col, tol);
  if (c.lhs != c.rhs)
    fail(ErrorKind::NotSolvable, "ν₋(I − T11²) = " + std::to_string(c.lhs) + " but ν₋(I − T₁ᵀT₁) = " +
                                     std::to_string(c.rhs));
  ExtremalPair p = detail::build_extremal(col, tol);
  require(detail::minus_of_identity_minus_square(p.t_m, tol) == p.kappa &&
              detail::minus_of_identity_minus_square(p.t_M, tol) == p.kappa,
          ErrorKind::AssertionFailed, "extremal extension has the wrong negative index");

  ExtremalPair neg = detail::build_extremal(col.negated(), tol);
  require(close(neg.t_m.matrix(), -p.t_M.matrix(), tol.residual) &&
              close(neg.t_M.matrix(), -p.t_m.matrix(), tol.residual),
          ErrorKind::AssertionFailed, "negation duality (−T)_m = −T_M fails");
  return p;
}

namespace detail {

inline void require_extension(const ExtremalPair& pair, const SymmetricMatrix& t, const Tolerance& tol) {
  Index n = pair.col.n1() + pair.col.n2();
  require_dims(t.dim() == n, "candidate has the wrong dimension");
  require(close(t.matrix().leftCols(pair.col.n1()), pair.col.column(), tol.residual), ErrorKind::NotAnExtension,
          "candidate does not extend T₁");
}

}  // namespace detail

// T_m ⪯ T ⪯ T_M
inline bool is_member(const ExtremalPair& pair, const SymmetricMatrix& t, const Tolerance& tol = default_tolerance()) {
  detail::require_extension(pair, t, tol);
  return loewner_leq(pair.t_m, t, tol) && loewner_leq(t, pair.t_M, tol);
}

// ν₋(I + T) = κ₋ and ν₋(I − T) = κ₊
inline bool index_member(const ExtremalPair& pair, const SymmetricMatrix& t, const Tolerance& tol = default_tolerance()) {
  detail::require_extension(pair, t, tol);
  double sc = 1.0 + t.norm();
  return inertia_of(detail::shifted(t, 1.0), tol, sc).n_minus == pair.kappa_minus &&
         inertia_of(detail::shifted(t, -1.0), tol, sc).n_minus == pair.kappa_plus;
}

inline SymmetricMatrix gap_formula(const ExtremalPair& pair) {
  Index n1 = pair.col.n1(), n2 = pair.col.n2();
  DenseMatrix g = DenseMatrix::Zero(n1 + n2, n1 + n2);
  g.bottomRightCorner(n2, n2) =
      2.0 * (DenseMatrix::Identity(n2, n2) - pair.v * pair.j.matrix() * pair.v.transpose());
  return SymmetricMatrix(g);
}

// T_M − T_m, checked against diag(0, 2(I − VJVᵀ)) and against J-isometry of Vᵀ.
inline SymmetricMatrix uniqueness_gap(const ExtremalPair& pair, const Tolerance& tol = default_tolerance()) {
  SymmetricMatrix gap = pair.t_M - pair.t_m;
  require(close(gap.matrix(), gap_formula(pair).matrix(), tol.residual), ErrorKind::AssertionFailed,
          "T_M − T_m differs from diag(0, 2(I − VJVᵀ))");
  Index n2 = pair.col.n2();
  if (n2 > 0) {
    JContractionData vd = defect_data(pair.v.transpose(), JSpace::identity(n2), JSpace(pair.j, tol), tol);
    bool zero_gap = gap.norm() <= tol.residual * (1.0 + gram_scale(pair.v));
    require(j_isometry_test(vd, tol).gram_test == zero_gap, ErrorKind::AssertionFailed,
            "zero gap disagrees with J-isometry of Vᵀ");
  }
  return gap;
}

inline bool krein_uniqueness_criterion(const SymmetricColumn& col, const Tolerance& tol = default_tolerance()) {
  if (!solvable(col, tol)) fail(ErrorKind::NotSolvable, "column violates the index condition");
  if (col.n2() == 0) return true;
  ExtremalPair p = detail::build_extremal(col, tol);
  DenseMatrix defect = DenseMatrix::Identity(col.n2(), col.n2()) - p.v * p.j.matrix() * p.v.transpose();
  return norm2(defect) <= tol.residual * gram_scale(p.v);
}

}  // namespace kreinkit
