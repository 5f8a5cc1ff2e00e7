#include "support.hpp"

#include "kreinkit/random.hpp"

using namespace kreinkit;

namespace {
SymmetricColumn col(double t11, double t21) { return SymmetricColumn(D({t11}), M({{t21}})); }
}  // namespace

TEST(Quasicontraction, SplitCounts) {
  EXPECT_EQ(split_counts(D({2, -3, 0})), std::make_pair(Index(1), Index(1)));
  EXPECT_EQ(inertia_of(SymmetricMatrix::identity(3) - D({4, 9, 0})).n_minus, 2);
  EXPECT_EQ(split_counts(SymmetricMatrix::zero(2)), std::make_pair(Index(0), Index(0)));
  EXPECT_EQ(split_counts(D({0.5, -0.5})), std::make_pair(Index(0), Index(0)));
}

TEST(Quasicontraction, Solvability) {
  EXPECT_TRUE(solvable(col(2, 0)));
  EXPECT_FALSE(solvable(col(0, 2)));
  SolvabilityCounts c = solvability_counts(col(0, 2));
  EXPECT_EQ(c.lhs, 0);
  EXPECT_EQ(c.rhs, 1);
  EXPECT_TRUE(solvable(SymmetricColumn(D({3, -0.2}), DenseMatrix::Zero(2, 2))));
}

TEST(Quasicontraction, ExtremesWithoutDefectCoupling) {
  ExtremalPair p = extremal_extensions(col(0, 0));
  EXPECT_TRUE(near(p.t_m.matrix(), D({0, -1}).matrix()));
  EXPECT_TRUE(near(p.t_M.matrix(), D({0, 1}).matrix()));
  EXPECT_EQ(p.kappa, 0);
}

TEST(Quasicontraction, ExtremesOfExpansion) {
  ExtremalPair p = extremal_extensions(col(2, 0));
  EXPECT_TRUE(near(p.t_m.matrix(), D({2, -1}).matrix(), 1e-12));
  EXPECT_TRUE(near(p.t_M.matrix(), D({2, 1}).matrix(), 1e-12));
  EXPECT_EQ(p.kappa, 1);
  EXPECT_EQ(p.kappa_plus, 1);
  EXPECT_EQ(p.kappa_minus, 0);
}

TEST(Quasicontraction, UniqueExtension) {
  ExtremalPair p = extremal_extensions(col(0, 1));
  EXPECT_TRUE(near(p.v.cwiseAbs(), M({{1}}), 1e-12));
  EXPECT_TRUE(near(p.t_m.matrix(), M({{0, 1}, {1, 0}}), 1e-12));
  EXPECT_TRUE(near(p.t_M.matrix(), M({{0, 1}, {1, 0}}), 1e-12));
  EXPECT_TRUE(near(uniqueness_gap(p).matrix(), DenseMatrix::Zero(2, 2), 1e-12));
}

TEST(Quasicontraction, UnsolvableThrows) {
  try {
    extremal_extensions(col(0, 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSolvable);
  }
}

TEST(Quasicontraction, Membership) {
  ExtremalPair p = extremal_extensions(col(0, 0));
  EXPECT_TRUE(is_member(p, p.t_m));
  EXPECT_TRUE(is_member(p, p.t_M));
  EXPECT_TRUE(is_member(p, 0.5 * (p.t_m + p.t_M)));
  for (int k = -15; k <= 15; ++k) {
    double t = 0.1 * k;
    SymmetricMatrix x = D({0, t});
    bool inside = std::abs(t) <= 1.0 + 1e-12;
    EXPECT_EQ(is_member(p, x), inside) << t;
    EXPECT_EQ(index_member(p, x), inside) << t;
  }
}

TEST(Quasicontraction, MembershipRequiresExtension) {
  ExtremalPair p = extremal_extensions(col(0, 0));
  try {
    is_member(p, D({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnExtension);
  }
}

TEST(Quasicontraction, Gap) {
  EXPECT_TRUE(near(uniqueness_gap(extremal_extensions(col(0, 0))).matrix(), D({0, 2}).matrix()));
  EXPECT_TRUE(near(uniqueness_gap(extremal_extensions(col(0, 0.5))).matrix(), D({0, 2 * (1 - 0.25)}).matrix(),
                   1e-12));
}

TEST(Quasicontraction, UniquenessCriterion) {
  EXPECT_TRUE(krein_uniqueness_criterion(col(0, 1)));
  EXPECT_FALSE(krein_uniqueness_criterion(col(0, 0.5)));
  EXPECT_TRUE(krein_uniqueness_criterion(SymmetricColumn(D({0.3}), DenseMatrix(0, 1))));
}

TEST(Quasicontraction, RandomGapIsPositive) {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    ColumnSpec spec{rng.coin(0.3), true};
    Index n2 = rng.integer(0, 2), n1 = rng.integer(std::max<Index>(n2, 1), 4);
    SymmetricColumn c = random_column(rng, n1, n2, spec);
    ExtremalPair p = extremal_extensions(c);
    EXPECT_TRUE(is_psd(uniqueness_gap(p)));
    EXPECT_TRUE(index_member(p, p.t_m));
    EXPECT_TRUE(index_member(p, p.t_M));
  }
}
