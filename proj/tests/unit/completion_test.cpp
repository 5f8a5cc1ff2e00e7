#include "support.hpp"

#include "kreinkit/random.hpp"

using namespace kreinkit;

namespace {
IncompleteBlock e1() { return IncompleteBlock(D({1, -1}), M({{1}, {1}})); }
}  // namespace

TEST(Completion, Completable) {
  EXPECT_TRUE(completable(e1()));
  EXPECT_FALSE(completable(IncompleteBlock(D({1, 0}), M({{0}, {1}}))));
  EXPECT_TRUE(completable(IncompleteBlock(D({0, -2, 0}), DenseMatrix::Zero(3, 2))));
}

TEST(Completion, MinimalSolutionOfIndefiniteBlock) {
  CompletionSolution sol = minimal_completion(e1());
  EXPECT_TRUE(near(sol.s, M({{1}, {1}})));
  EXPECT_TRUE(near(sol.j.matrix(), D({1, -1}).matrix()));
  EXPECT_TRUE(near(sol.a22_min.matrix(), M({{0}})));
  EXPECT_EQ(sol.kappa, 1);
  EXPECT_LE(sol.residual, 1e-12);
  EXPECT_EQ(inertia_of(assemble(e1(), sol.a22_min)).n_minus, 1);
}

TEST(Completion, ClassicNonnegativeCompletion) {
  IncompleteBlock blk(SymmetricMatrix::identity(2), M({{1}, {0}}));
  CompletionSolution sol = minimal_completion(blk);
  EXPECT_TRUE(near(sol.a22_min.matrix(), M({{1}})));
  EXPECT_EQ(sol.kappa, 0);
  EXPECT_EQ(inertia_of(assemble(blk, sol.a22_min)).n_minus, 0);
}

TEST(Completion, ZeroOffDiagonalGivesZeroCorner) {
  IncompleteBlock blk(D({3, -1}), DenseMatrix::Zero(2, 2));
  EXPECT_TRUE(near(minimal_completion(blk).a22_min.matrix(), DenseMatrix::Zero(2, 2)));
}

TEST(Completion, KernelObstructionThrows) {
  try {
    minimal_completion(IncompleteBlock(D({1, 0}), M({{0}, {1}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCompletable);
    ASSERT_TRUE(e.residual());
    EXPECT_NEAR(*e.residual(), 1.0, 1e-12);
  }
}

TEST(Completion, SolutionSet) {
  SymmetricMatrix a22 = minimal_completion(e1()).a22_min;
  EXPECT_TRUE(is_solution(e1(), a22));
  EXPECT_TRUE(is_solution(e1(), a22 + SymmetricMatrix::identity(1)));
  EXPECT_FALSE(is_solution(e1(), a22 - SymmetricMatrix::identity(1)));
  EXPECT_EQ(inertia_of(assemble(e1(), a22 - SymmetricMatrix::identity(1))).n_minus, 2);
}

TEST(Completion, Assemble) {
  EXPECT_TRUE(near(assemble(e1(), SymmetricMatrix::zero(1)).matrix(), M({{1, 0, 1}, {0, -1, 1}, {1, 1, 0}})));
  IncompleteBlock z(SymmetricMatrix::zero(2), DenseMatrix::Zero(2, 1));
  EXPECT_TRUE(near(assemble(z, SymmetricMatrix::zero(1)).matrix(), DenseMatrix::Zero(3, 3)));
  IncompleteBlock bd(D({1, 2}), DenseMatrix::Zero(2, 2));
  EXPECT_TRUE(near(assemble(bd, D({3, 4})).matrix(), D({1, 2, 3, 4}).matrix()));
}

TEST(Completion, SchurInertia) {
  EXPECT_EQ(schur_inertia(e1(), SymmetricMatrix::zero(1)).n_minus, 1);
  IncompleteBlock b2(SymmetricMatrix::identity(2), DenseMatrix::Zero(2, 2));
  EXPECT_EQ(schur_inertia(b2, -SymmetricMatrix::identity(2)).n_minus, 2);
  IncompleteBlock b3(D({1, -1}), DenseMatrix::Zero(2, 1));
  EXPECT_EQ(schur_inertia(b3, SymmetricMatrix::zero(1)).n_minus, 1);
}

TEST(Completion, DimensionMismatch) {
  try {
    IncompleteBlock(D({1, 2}), M({{1}, {2}, {3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
  EXPECT_THROW(assemble(e1(), SymmetricMatrix::zero(2)), Error);
}

TEST(Completion, RandomMinimality) {
  Rng rng(5);
  for (int k = 0; k < 100; ++k) {
    CompletionInstance inst = random_completion(rng);
    if (!completable(inst.blk)) continue;
    CompletionSolution sol = minimal_completion(inst.blk);
    EXPECT_EQ(inertia_of(assemble(inst.blk, sol.a22_min)).n_minus, sol.kappa);
    EXPECT_EQ(schur_inertia(inst.blk, sol.a22_min), inertia_of(assemble(inst.blk, sol.a22_min)));
  }
}
