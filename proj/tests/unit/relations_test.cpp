#include "support.hpp"

#include "kreinkit/io.hpp"
#include "kreinkit/random.hpp"

using namespace kreinkit;

namespace {

LinearRelation graph(const DenseMatrix& m) { return LinearRelation::from_operator(m); }

// e₁ ↦ e₁ on span{e₁} ⊂ ℝ²
LinearRelation example_one() { return LinearRelation::from_generators(M({{1}, {0}}), M({{1}, {0}})); }

// Its Cayley column is T₁₁ = 0, T₂₁ = 1, which admits a single extension.
LinearRelation unique_example() { return LinearRelation::from_generators(M({{1}, {1}}), M({{1}, {-1}})); }

LinearRelation with_mul_e2() {
  return LinearRelation::from_generators(M({{1, 0}, {0, 0}}), M({{1, 0}, {0, 1}}));
}

}  // namespace

TEST(Relations, GraphOfScalar) {
  LinearRelation g = graph(M({{2}}));
  ASSERT_EQ(g.graph_dim(), 1);
  double s = std::sqrt(5.0);
  EXPECT_TRUE(near(g.basis().cwiseAbs(), M({{1 / s}, {2 / s}}), 1e-12));
}

TEST(Relations, PureMultivalued) {
  LinearRelation r = LinearRelation::from_generators(DenseMatrix::Zero(2, 2), DenseMatrix::Identity(2, 2));
  EXPECT_EQ(mul_basis(r).cols(), 2);
  EXPECT_EQ(dom_basis(r).cols(), 0);
}

TEST(Relations, RepeatedGeneratorsIgnored) {
  LinearRelation a = LinearRelation::from_generators(M({{1, 1}, {0, 0}}), M({{2, 2}, {1, 1}}));
  LinearRelation b = LinearRelation::from_generators(M({{1}, {0}}), M({{2}, {1}}));
  EXPECT_EQ(a.graph_dim(), 1);
  EXPECT_TRUE(same_relation(a, b));
}

TEST(Relations, AdjointInverseShift) {
  DenseMatrix m = M({{1, 2}, {3, 4}});
  EXPECT_TRUE(same_relation(adjoint(graph(m)), graph(m.transpose())));
  LinearRelation inv = inverse(graph(D({1, 0}).matrix()));
  DenseMatrix mul = mul_basis(inv);
  ASSERT_EQ(mul.cols(), 1);
  EXPECT_TRUE(near(mul.cwiseAbs(), M({{0}, {1}}), 1e-12));
  EXPECT_TRUE(same_relation(shift(graph(DenseMatrix::Zero(2, 2)), 1.0), graph(DenseMatrix::Identity(2, 2))));
}

TEST(Relations, Classification) {
  RelationClass a = classify(graph(D({1, -2}).matrix()));
  EXPECT_TRUE(a.selfadjoint);
  EXPECT_EQ(a.negatives, 1);

  // {((x, 0), (x, y))}: symmetric with a graph of full dimension, hence selfadjoint.
  LinearRelation b = LinearRelation::from_generators(M({{1, 0}, {0, 0}}), M({{1, 0}, {0, 1}}));
  RelationClass cb = classify(b);
  EXPECT_TRUE(cb.symmetric);
  EXPECT_TRUE(cb.selfadjoint);
  EXPECT_EQ(cb.negatives, 0);
  EXPECT_EQ(inertia_of(form_a(b).gram).n_minus, 0);
  EXPECT_EQ(form_a1(b).negatives, 0);

  RelationClass rot = classify(graph(M({{0, -1}, {1, 0}})));
  EXPECT_FALSE(rot.symmetric);
}

TEST(Relations, SymmetricNotSelfadjoint) {
  // Restriction of the identity to span{e₁}: symmetric, adjoint is strictly larger.
  RelationClass c = classify(example_one());
  EXPECT_TRUE(c.symmetric);
  EXPECT_FALSE(c.selfadjoint);
  EXPECT_EQ(c.negatives, 0);
}

TEST(Relations, CayleyOfScalars) {
  for (double a : {-3.0, -0.5, 0.0, 0.25, 2.0}) {
    LinearRelation c = cayley(graph(M({{a}})));
    EXPECT_TRUE(same_relation(c, graph(M({{(1 - a) / (1 + a)}})))) << a;
  }
  LinearRelation all_mul = LinearRelation::from_generators(DenseMatrix::Zero(2, 2), DenseMatrix::Identity(2, 2));
  EXPECT_TRUE(same_relation(cayley(all_mul), graph(-DenseMatrix::Identity(2, 2))));
}

TEST(Relations, CayleyInvolution) {
  Rng rng(37);
  for (int k = 0; k < 50; ++k) {
    Index n = rng.integer(1, 4), g = rng.integer(0, 2 * n);
    LinearRelation r = LinearRelation::from_generators(rng.gaussian(n, g), rng.gaussian(n, g));
    EXPECT_LE(relation_distance(cayley(cayley(r)), r), 1e-10);
  }
}

TEST(Relations, BoundedOperator) {
  DenseMatrix m = M({{1, 2}, {3, 4}});
  auto op = as_bounded_operator(graph(m));
  ASSERT_TRUE(op);
  EXPECT_TRUE(near(op->matrix, m, 1e-12));
  EXPECT_FALSE(as_bounded_operator(with_mul_e2()));
}

TEST(Relations, InertiaCountsMultivaluedPart) {
  EXPECT_EQ(relation_inertia(with_mul_e2()), I4(1, 0, 0, 1));
  EXPECT_EQ(relation_inertia(graph(D({2, -3, 0}).matrix())), I4(1, 1, 1, 0));
}

TEST(Relations, FormOfSelfadjoint) {
  LinearRelation h = graph(D({1, -0.5}).matrix());
  EXPECT_LE(form_identity_residual(h), 1e-12);
  EXPECT_EQ(form_a1(h).negatives, form_a(h).negatives);
}

TEST(Relations, FriedrichsKreinOfWorkedExample) {
  auto [af, ak] = friedrichs_krein(example_one());
  EXPECT_LE(relation_distance(ak, graph(D({1, 0}).matrix())), 1e-9);
  EXPECT_LE(relation_distance(af, with_mul_e2()), 1e-9);
  DenseMatrix mul = mul_basis(af);
  ASSERT_EQ(mul.cols(), 1);
  EXPECT_TRUE(near(mul.cwiseAbs(), M({{0}, {1}}), 1e-9));
  EXPECT_TRUE(relation_leq(ak, af));
}

TEST(Relations, SelfadjointIsItsOwnExtension) {
  LinearRelation h = graph(D({2, -0.5}).matrix());
  auto [af, ak] = friedrichs_krein(h);
  EXPECT_LE(relation_distance(af, h), 1e-9);
  EXPECT_LE(relation_distance(ak, h), 1e-9);
  EXPECT_TRUE(krein_uniqueness_relation(h));
  EXPECT_TRUE(inverse_duality_check(h));
}

TEST(Relations, NonnegativeOrdering) {
  // A = graph of a positive matrix restricted to a subspace.
  LinearRelation a = LinearRelation::from_generators(M({{1}, {1}, {0}}), M({{3}, {2}, {1}}));
  ASSERT_TRUE(classify(a).nonnegative);
  auto [af, ak] = friedrichs_krein(a);
  EXPECT_TRUE(relation_leq(ak, af));
  EXPECT_EQ(relation_inertia(af).n_minus, 0);
  EXPECT_EQ(relation_inertia(ak).n_minus, 0);
}

TEST(Relations, RelationOrder) {
  EXPECT_TRUE(relation_leq(graph(DenseMatrix::Zero(2, 2)), graph(DenseMatrix::Identity(2, 2))));
  EXPECT_TRUE(relation_leq(graph(D({1, -1}).matrix()), graph(D({2, -0.5}).matrix())));
  EXPECT_FALSE(relation_leq(graph(DenseMatrix::Identity(2, 2)), graph(DenseMatrix::Zero(2, 2))));
}

TEST(Relations, ExtensionMembership) {
  KreinData kd = krein_data(example_one());
  EXPECT_TRUE(ext_membership(kd, kd.a_f));
  EXPECT_TRUE(ext_membership(kd, kd.a_k));
  for (double t : {-2.0, -0.5, -0.01, 0.0, 0.3, 1.0, 4.0}) {
    MembershipReport r = membership_report(kd, graph(D({1, t}).matrix()));
    EXPECT_TRUE(r.agree()) << t;
    EXPECT_EQ(r.by_cayley, t >= 0) << t;
  }
  EXPECT_FALSE(ext_membership(kd, graph(D({1, -5}).matrix())));
}

TEST(Relations, NonExtensionRejected) {
  KreinData kd = krein_data(example_one());
  try {
    ext_membership(kd, graph(D({2, 0}).matrix()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAnExtension);
  }
}

TEST(Relations, ResolventInterval) {
  KreinData kd = krein_data(example_one());
  for (const LinearRelation& at : {kd.a_f, kd.a_k, graph(D({1, 2}).matrix())}) {
    double mu = uniform_lower_bound(kd, at);
    for (double d : {0.1, 1.0, 10.0}) EXPECT_TRUE(resolvent_interval_check(kd, at, -mu + d));
  }
  try {
    resolvent_interval_check(kd, kd.a_k, -uniform_lower_bound(kd, kd.a_k) - 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShiftNotAdmissible);
  }
}

TEST(Relations, InverseDuality) {
  EXPECT_TRUE(inverse_duality_check(example_one()));
  DualityDistances d = inverse_duality_distances(krein_data(example_one()));
  EXPECT_LE(d.friedrichs, 1e-9);
  EXPECT_LE(d.krein, 1e-9);
}

TEST(Relations, Antitonicity) {
  EXPECT_TRUE(antitonicity_check(D({1, -1}), D({2, -0.5})));
  EXPECT_TRUE(loewner_leq(D({0.5, -2}), D({1, -1})));
  EXPECT_TRUE(antitonicity_check(SymmetricMatrix::identity(2), 2.0 * SymmetricMatrix::identity(2)));
  // −1 ≤ 1 with different inertias, and (−1)⁻¹ = −1 ≤ 1 = 1⁻¹ so the inverse order is reversed the wrong way.
  EXPECT_FALSE(antitonicity_check(D({-1}), D({1})));
  EXPECT_TRUE(antitonicity_check(graph(D({1, -1}).matrix()), graph(D({2, -0.5}).matrix())));
}

TEST(Relations, Uniqueness) {
  EXPECT_FALSE(krein_uniqueness_relation(example_one()));
  EXPECT_TRUE(krein_uniqueness_relation(unique_example()));
  KreinData kd = krein_data(unique_example());
  EXPECT_LE(relation_distance(kd.a_f, kd.a_k), 1e-9);
  UniquenessReport r = uniqueness_report(kd);
  EXPECT_TRUE(r.agree());
  EXPECT_TRUE(r.gap_zero);
  EXPECT_LE(r.translation, 1e-10);
}

TEST(Relations, EigenvalueMinusOneHasNoCayleyOperator) {
  try {
    krein_data(graph(D({2, -1}).matrix()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CayleyNotOperator);
  }
}

TEST(Relations, NotSymmetricRejected) {
  try {
    krein_data(graph(M({{0, -1}, {1, 0}})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSymmetric);
  }
}

TEST(Relations, JsonRoundTrip) {
  Rng rng(41);
  for (int k = 0; k < 20; ++k) {
    Index n = rng.integer(1, 4), g = rng.integer(0, 2 * n);
    LinearRelation r = LinearRelation::from_generators(rng.gaussian(n, g), rng.gaussian(n, g));
    io::json doc = io::parse(io::relation_to_json(r).dump(2), "round trip");
    EXPECT_LE(relation_distance(io::relation_from_json(doc), r), 1e-12);

    DenseMatrix m = rng.gaussian(n, g + 1);
    EXPECT_EQ(io::matrix_from_json(io::parse(io::matrix_to_json(m).dump(), "round trip")), m);
  }
}
