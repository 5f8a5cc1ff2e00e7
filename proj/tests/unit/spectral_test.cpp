#include "support.hpp"

#include "kreinkit/random.hpp"

using namespace kreinkit;

TEST(Spectral, DiagonalDecomposition) {
  auto sd = spectral_decompose(D({2, -3, 0}));
  EXPECT_TRUE(near(sd.eigenvalues, M({{-3}, {0}, {2}})));
  EXPECT_TRUE(near(sd.eigenvectors.cwiseAbs(), M({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})));
}

TEST(Spectral, SwapDecomposition) {
  auto sd = spectral_decompose(S({{0, 1}, {1, 0}}));
  EXPECT_TRUE(near(sd.eigenvalues, M({{-1}, {1}})));
  double r = 1 / std::sqrt(2.0);
  EXPECT_TRUE(near(sd.eigenvectors.cwiseAbs(), M({{r, r}, {r, r}})));
  EXPECT_NEAR(sd.eigenvectors(0, 0) * sd.eigenvectors(1, 0), -0.5, 1e-12);
}

TEST(Spectral, RandomReconstruction) {
  Rng rng(11);
  for (int k = 0; k < 20; ++k) {
    SymmetricMatrix a(rng.gaussian(8, 8));
    auto sd = spectral_decompose(a);
    DenseMatrix back = sd.eigenvectors * sd.eigenvalues.asDiagonal() * sd.eigenvectors.transpose();
    EXPECT_LE(norm2(back - a.matrix()), 1e-12 * (1 + a.norm()));
  }
}

TEST(Spectral, InertiaExamples) {
  EXPECT_EQ(inertia_of(D({2, -3, 0})), I4(1, 1, 1, 0));
  EXPECT_EQ(inertia_of(SymmetricMatrix::identity(4)), I4(4, 0, 0, 0));
  EXPECT_EQ(inertia_of(D({1e-20, 1})), I4(1, 0, 1, 0));
  EXPECT_EQ(inertia_of(SymmetricMatrix::zero(0)), I4(0, 0, 0, 0));
}

TEST(Spectral, SignatureKernelSignedPositive) {
  EXPECT_TRUE(near(signature_of(D({2, -3})).matrix(), D({1, -1}).matrix()));
  EXPECT_TRUE(near(signature_of(D({0, 5})).matrix(), D({1, 1}).matrix()));
  EXPECT_TRUE(near(signature_of(S({{0, 1}, {1, 0}})).matrix(), M({{0, 1}, {1, 0}})));
}

TEST(Spectral, ModulusPowers) {
  EXPECT_TRUE(near(modulus_power(D({4, -9}), 0.5).matrix(), D({2, 3}).matrix()));
  SymmetricMatrix h = modulus_power(D({4, -9}), 0.5);
  EXPECT_TRUE(near(h.matrix() * h.matrix(), D({4, 9}).matrix()));
  Rng rng(3);
  SymmetricMatrix a(rng.gaussian(5, 5));
  SymmetricMatrix abs1 = modulus_power(a, 1.0);
  EXPECT_TRUE(is_psd(abs1));
  EXPECT_TRUE(near(abs1.matrix() * abs1.matrix(), a.matrix() * a.matrix(), 1e-10));
}

TEST(Spectral, MoorePenrosePowers) {
  SymmetricMatrix r = moore_penrose_power(D({4, 0}), 0.5);
  EXPECT_TRUE(near(r.matrix(), D({0.5, 0}).matrix()));
  SymmetricMatrix h = modulus_power(D({4, 0}), 0.5);
  EXPECT_TRUE(near(r.matrix() * h.matrix() * r.matrix(), r.matrix()));
  SymmetricMatrix a = S({{3, 1}, {1, -2}});
  EXPECT_TRUE(near(modulus_power(a, 0.5).matrix() * moore_penrose_power(a, 0.5).matrix(), M({{1, 0}, {0, 1}}),
                   1e-12));
}

TEST(Spectral, RangeFactor) {
  auto s = range_factor(SymmetricMatrix::identity(2), M({{1}, {1}}));
  ASSERT_TRUE(s);
  EXPECT_TRUE(near(*s, M({{1}, {1}})));
  EXPECT_FALSE(range_factor(D({1, 0}), M({{0}, {1}})));
  auto t = range_factor(D({2, 3}), M({{2}, {0}}));
  ASSERT_TRUE(t);
  EXPECT_TRUE(near(*t, M({{1}, {0}})));
  EXPECT_TRUE(near(D({2, 3}).matrix() * *t, M({{2}, {0}})));
}

TEST(Spectral, LoewnerOrder) {
  EXPECT_TRUE(loewner_leq(SymmetricMatrix::zero(2), SymmetricMatrix::identity(2)));
  EXPECT_TRUE(loewner_leq(D({1, -1}), D({2, -0.5})));
  EXPECT_FALSE(loewner_leq(SymmetricMatrix::identity(2), SymmetricMatrix::zero(2)));
}

TEST(Spectral, CheckedRejectsAsymmetry) {
  EXPECT_NO_THROW(SymmetricMatrix::checked(M({{1, 2}, {2, 1}}), 1e-9));
  try {
    SymmetricMatrix::checked(M({{1, 2}, {0, 1}}), 1e-9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(Spectral, ToleranceValidation) {
  EXPECT_THROW(set_default_tolerance(Tolerance::uniform(-1)), Error);
  EXPECT_TRUE(Tolerance::uniform(1e-8).valid());
}
