#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kreinkit/random.hpp"

namespace kreinkit {

// Outcome of one randomized property case.
struct CaseResult {
  bool ok = true;
  double residual = 0.0;  // worst normalized residual seen
  std::string failure;
  std::map<std::string, Index> tally;

  void check(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }

  void bound(double r, double limit, const std::string& what) {
    residual = std::max(residual, r);
    check(std::isfinite(r) && r <= limit, what + " residual " + std::to_string(r));
  }

  void count(const std::string& key, Index by = 1) { tally[key] += by; }

  void merge(const CaseResult& other) {
    if (!other.ok) check(false, other.failure);
    residual = std::max(residual, other.residual);
    for (const auto& [k, v] : other.tally) tally[k] += v;
  }
};

template <class F>
CaseResult guarded(F&& body) {
  CaseResult r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.check(false, e.what());
  }
  return r;
}

namespace checks {

inline double rel(const DenseMatrix& x, const DenseMatrix& y) { return relative_residual(x, y); }

inline SymmetricMatrix random_psd(Rng& rng, Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.coin(0.25) ? 0.0 : rng.uniform(0.1, 2.0);
  return random_with_spectrum(rng, v);
}

inline SymmetricMatrix random_indefinite(Rng& rng, Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) {
    double m = rng.uniform(0.1, 2.0);
    v(i) = i == 0 || rng.coin() ? -m : m;
  }
  return random_with_spectrum(rng, v);
}

// Minimal completion has the index of A11; the solution set is a22_min + {Y ⪰ 0}.
inline CaseResult completion_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    CompletionInstance in = random_completion(rng);
    CompletionSolution sol = minimal_completion(in.blk, tol);
    r.check(sol.kappa == in.kappa, "ν₋(A11) differs from the prescribed index");
    r.check(inertia_of(assemble(in.blk, sol.a22_min), tol).n_minus == in.kappa,
            "minimal completion has the wrong negative index");
    r.bound(sol.residual / (1.0 + norm2(in.blk.a12)), 1e-9, "factorization");
    r.bound(rel(sol.a22_min.matrix(), (sol.s.transpose() * sol.j.matrix() * sol.s).eval()), 1e-9,
            "minimal corner");
    Index n2 = in.blk.n2();
    for (int k = 0; k < 10; ++k) {
      bool psd = k < 5;
      SymmetricMatrix y = psd ? random_psd(rng, n2) : random_indefinite(rng, n2);
      SymmetricMatrix a22 = sol.a22_min + y;
      bool by_order = is_solution(in.blk, a22, tol);
      bool by_count = inertia_of(assemble(in.blk, a22), tol).n_minus == in.kappa;
      r.check(by_order == by_count, "Loewner membership disagrees with the eigen count");
      r.check(by_order == psd, "membership verdict contradicts the sign of Y");
      r.count(psd ? "members" : "non_members");
    }
  });
}

inline CaseResult schur_inertia_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    CompletionInstance in = random_completion(rng);
    SymmetricMatrix a22(rng.gaussian(in.blk.n2(), in.blk.n2()));
    r.check(schur_inertia(in.blk, a22, tol) == inertia_of(assemble(in.blk, a22), tol),
            "Schur-complement inertia differs from the direct inertia");
  });
}

inline CaseResult inertia_balance_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    if (rng.coin(0.25)) {
      JContractionInstance jc = random_j_contraction(rng, 5, true);
      inertia_balance(jc.t, jc.j1, jc.j2, tol);
      r.count("isometric");
      return;
    }
    Index n1 = rng.integer(1, 5), n2 = rng.integer(1, 5);
    JSpace j1 = random_jspace(rng, n1, rng.integer(0, n1));
    JSpace j2 = random_jspace(rng, n2, rng.integer(0, n2));
    inertia_balance(rng.gaussian(n2, n1), j1, j2, tol);
  });
}

// ν₋(I − T²) = ν₋(I + T) + ν₋(I − T), with the split matched to the spectrum.
inline CaseResult split_counts_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    Index n = rng.integer(1, 6);
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rng.normal() * 1.5;
    SymmetricMatrix t = random_with_spectrum(rng, v);
    auto [below, above] = split_counts(t, tol);
    Index lo = 0, hi = 0;
    for (Index i = 0; i < n; ++i) {
      lo += v(i) < -1.0;
      hi += v(i) > 1.0;
    }
    r.check(below == lo && above == hi, "split counts differ from the spectrum");
  });
}

inline CaseResult factor_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    // Equality: A = BᵀJ₂B with B onto.
    {
      Index n2 = rng.integer(1, 3), n1 = rng.integer(n2, 4);
      JSpace j2 = random_jspace(rng, n2, rng.integer(0, n2));
      DenseMatrix b = rng.gaussian(n2, n1);
      SymmetricMatrix a = congruence(b, j2.j());
      if (well_separated(a, 0.01, tol)) {
        auto f = douglas_factor(a, b, j2, DouglasMode::equality, tol);
        r.check(f.has_value(), "equality factorization missing");
        if (f) {
          r.check(f->classification == JClass::unitary, "onto B must give a J-unitary factor");
          r.bound(rel(f->factor * Spectrum(a, tol).modulus_power(0.5).matrix(), b), 1e-8, "Douglas equality");
        }
        r.count("douglas_equality");
      }
    }
    // Inequality: A = BᵀJ₂B + P with ν₋(A) = ν₋(J₂).
    {
      Index n2 = rng.integer(1, 3), n1 = rng.integer(n2, 4);
      JSpace j2 = random_jspace(rng, n2, rng.integer(0, n2));
      DenseMatrix b = rng.gaussian(n2, n1);
      SymmetricMatrix a = congruence(b, j2.j()) + random_psd(rng, n1);
      if (inertia_of(a, tol).n_minus == j2.n_minus() && well_separated(a, 0.01, tol)) {
        auto f = douglas_factor(a, b, j2, DouglasMode::inequality, tol);
        r.check(f.has_value(), "inequality factorization missing");
        if (f) r.bound(rel(f->factor * Spectrum(a, tol).modulus_power(0.5).matrix(), b), 1e-8, "Douglas inequality");
        r.count("douglas_inequality");
      }
    }
    // Negativity balance: Bᵀ = |A|^{1/2}K with K a J-contraction into ran A.
    {
      Index n = rng.integer(1, 4);
      Index minus = rng.integer(0, n);
      SymmetricMatrix a = random_with_inertia(rng, n - minus, minus, 0);
      Spectrum sa(a, tol);
      auto [basis, plus] = detail::signed_range_basis(sa);
      Index m = rng.integer(1, 3);
      JSpace j2 = random_jspace(rng, m, rng.integer(0, std::min<Index>(m, minus)));
      DenseMatrix k = random_j_contraction_into(rng, j2, basis, plus);
      DenseMatrix b = (sa.modulus_power(0.5).matrix() * k).transpose();
      auto f = schur_negativity_factor(a, b, j2, tol);
      r.check(f.has_value(), "negativity balance failed for a constructed instance");
      if (f) r.bound(rel(f->factor, k), 1e-8, "negativity factor");
    }
    // Defect and link identities of a J-contraction.
    {
      bool iso = rng.coin(0.3);
      JContractionInstance jc = random_j_contraction(rng, 4, iso);
      JContractionData d = defect_data(jc.t, jc.j1, jc.j2, tol);
      for (int attempt = 0; attempt < 100 && !detail::defect_separated(d, 0.01); ++attempt) {
        jc = random_j_contraction(rng, 4, iso);
        d = defect_data(jc.t, jc.j1, jc.j2, tol);
      }
      r.bound(defect_identity_residual(d) / gram_scale(jc.t), 1e-9, "defect identities");
      r.bound(link_identity_residual(d) / gram_scale(jc.t), 1e-9, "link identities");
      r.check(kernel_map_check(d, tol), "J₂T does not map ker D_T onto ker D_{T*}");
      range_intersection(d, tol);
      JIsometryReport rep = j_isometry_test(d, tol);
      r.check(!iso || rep.gram_test, "constructed J-isometry not recognized");
      r.count(rep.gram_test ? "isometries" : "strict");
    }
  });
}

inline CaseResult lift_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    LiftInstance li = random_lift(rng, 4, tol);
    DenseMatrix tt = lift(li.data, li.params, li.j1p, li.j2p, tol);
    LiftParameters back = extract_lift_parameters(tt, li.data, li.j1p, li.j2p, tol);
    DenseMatrix again = lift(li.data, back, li.j1p, li.j2p, tol);
    r.bound(rel(again, tt), 1e-8, "lift round trip");
    r.bound(rel(back.gamma1, li.params.gamma1), 1e-8, "Γ₁ recovery");
    r.bound(rel(back.gamma2, li.params.gamma2), 1e-8, "Γ₂ recovery");
    r.bound(rel(back.gamma, li.params.gamma), 1e-8, "Γ recovery");
    r.bound(link_identity_residual(li.data) / gram_scale(li.data.t), 1e-9, "link identities");
  });
}

struct GridOutcome {
  Index members = 0, points = 0;
  bool agree = true;
};

// T₂₂ = center + t·I on 21 points, center the midpoint of the interval.
inline GridOutcome interval_sweep(const ExtremalPair& p, const Tolerance& tol) {
  Index n2 = p.col.n2();
  DenseMatrix g = (p.t_M - p.t_m).matrix().bottomRightCorner(n2, n2);
  SymmetricMatrix gs(g);
  Spectrum sg(gs, tol);
  double lo = sg.values()(0), hi = sg.values()(n2 - 1);
  double w = lo > 1e-6 ? lo / 2.0 : std::max(hi / 2.0, 0.5);
  DenseMatrix center = p.t_m.matrix().bottomRightCorner(n2, n2) + g / 2.0;
  GridOutcome out;
  for (int k = 0; k <= 20; ++k) {
    double t = w * 0.15 * (k - 10);
    DenseMatrix m = p.t_m.matrix();
    m.bottomRightCorner(n2, n2) = center + t * DenseMatrix::Identity(n2, n2);
    SymmetricMatrix tm(m);
    bool a = is_member(p, tm, tol);
    bool b = index_member(p, tm, tol);
    out.agree = out.agree && a == b;
    out.members += a;
    ++out.points;
  }
  return out;
}

inline CaseResult extremal_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    ColumnSpec spec;
    spec.unique = rng.coin(0.3);
    Index n2 = rng.integer(1, 2), n1 = rng.integer(spec.unique ? n2 : 1, 3);
    SymmetricColumn col = random_column(rng, n1, n2, spec);
    ExtremalPair p = extremal_extensions(col, tol);
    ExtremalPair neg = extremal_extensions(col.negated(), tol);
    double dual = std::max(rel(neg.t_m.matrix(), (-p.t_M).matrix()), rel(neg.t_M.matrix(), (-p.t_m).matrix()));
    r.bound(dual, 1e-9, "negation duality");
    r.bound(rel((p.t_M - p.t_m).matrix(), gap_formula(p).matrix()), 1e-9, "gap formula");
    uniqueness_gap(p, tol);
    bool unique = krein_uniqueness_criterion(col, tol);
    r.check(!spec.unique || unique, "isometric V must give a unique extension");
    GridOutcome go = interval_sweep(p, tol);
    r.check(go.agree, "Loewner membership disagrees with the index test on the grid");
    r.count("members", go.members);
    r.count("points", go.points);

    SymmetricColumn bad = random_column(rng, rng.integer(1, 3), rng.integer(1, 2), ColumnSpec{false, false});
    bool threw = false;
    try {
      extremal_extensions(bad, tol);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::NotSolvable;
    }
    r.check(threw, "unsolvable column was not rejected");
  });
}

// Mapping of eigenvalue intervals under the Cayley transform.
inline CaseResult relation_algebra_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    Index n = rng.integer(1, 5);
    Index k = rng.integer(1, 2 * n);
    DenseMatrix f = rng.gaussian(n, k), fp = rng.gaussian(n, k);
    if (rng.coin(0.3)) f.col(0).setZero();
    LinearRelation a = LinearRelation::from_generators(f, fp, tol);
    r.bound(relation_distance(cayley(cayley(a)), a), 1e-9, "Cayley involution");
    r.bound(relation_distance(inverse(cayley(a)), cayley(negate(a))), 1e-9, "inverse of the Cayley transform");
    r.bound(relation_distance(adjoint(adjoint(a)), a), 1e-9, "double adjoint");

    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = rng.normal() * 2.0;
    SymmetricMatrix h = random_with_spectrum(rng, v);
    auto c = as_bounded_operator(cayley(LinearRelation::from_operator(h.matrix(), tol)), tol);
    r.check(c.has_value(), "Cayley transform of a matrix without eigenvalue −1 is multivalued");
    if (c) {
      Vector cv = spectral_decompose(SymmetricMatrix(c->matrix)).eigenvalues;
      Index h_low = 0, h_high = 0, c_low = 0, c_mid = 0;
      for (Index i = 0; i < n; ++i) {
        h_low += v(i) < -1.0;
        h_high += v(i) > 1.0;
        c_low += cv(i) < -1.0;
        c_mid += cv(i) > -1.0 && cv(i) < 0.0;
      }
      r.check(h_low == c_low && h_high == c_mid, "Cayley mapping of eigenvalue intervals fails");
    }

    Index n1 = rng.integer(1, 3), n2 = rng.integer(0, 2);
    ColumnSpec spec;
    spec.solvable = n2 == 0 || rng.coin(0.7);
    SymmetricColumn col = random_column(rng, n1, n2, spec);
    LinearRelation sym = relation_from_column(rng, col, tol);
    r.check(classify(sym, tol).symmetric, "relation built from a symmetric column is not symmetric");
    r.bound(form_identity_residual(sym, tol), 1e-10, "form identities");
  });
}

inline SymmetricMatrix embed(const KreinData& kd, const DenseMatrix& t) {
  DenseMatrix w(kd.u1.rows(), kd.u1.cols() + kd.u2.cols());
  w << kd.u1, kd.u2;
  return SymmetricMatrix(DenseMatrix(w * t * w.transpose()));
}

// A member T = T_m + diag(0, G^{1/2}CG^{1/2}) with 0 ⪯ C ⪯ I, G = T_M − T_m on 𝔥₂.
inline SymmetricMatrix random_member(Rng& rng, const ExtremalPair& p, const Tolerance& tol) {
  Index n2 = p.col.n2();
  DenseMatrix t = p.t_m.matrix();
  if (n2 == 0) return p.t_m;
  SymmetricMatrix g(DenseMatrix((p.t_M - p.t_m).matrix().bottomRightCorner(n2, n2)));
  Vector c(n2);
  for (Index i = 0; i < n2; ++i) c(i) = rng.uniform(0.0, 1.0);
  DenseMatrix root = Spectrum(g, tol).modulus_power(0.5).matrix();
  t.bottomRightCorner(n2, n2) += root * random_with_spectrum(rng, c).matrix() * root;
  return SymmetricMatrix(t);
}

inline SymmetricMatrix random_extension(Rng& rng, const ExtremalPair& p) {
  Index n2 = p.col.n2();
  DenseMatrix t = p.t_m.matrix();
  if (n2 > 0) t.bottomRightCorner(n2, n2) += SymmetricMatrix(rng.gaussian(n2, n2)).matrix() * 1.5;
  return SymmetricMatrix(t);
}

inline SymmetricColumn random_relation_column(Rng& rng, bool unique) {
  Index n2 = rng.integer(unique ? 1 : 0, 2), n1 = rng.integer(std::max<Index>(n2, 1), 3);
  ColumnSpec spec;
  spec.unique = unique;
  return random_column(rng, n1, n2, spec);
}

inline CaseResult extension_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    SymmetricColumn col = random_relation_column(rng, rng.coin(0.2));
    LinearRelation a = relation_from_column(rng, col, tol);
    KreinData kd = krein_data(a, tol);
    r.check(kd.kappa == extremal_extensions(col, tol).kappa, "κ is not preserved by the relation embedding");

    std::vector<std::pair<LinearRelation, bool>> candidates;  // (Ã, known member?)
    candidates.emplace_back(kd.a_f, true);
    candidates.emplace_back(kd.a_k, true);
    for (int i = 0; i < 2; ++i) {
      SymmetricMatrix t = embed(kd, random_member(rng, kd.pair, tol).matrix());
      candidates.emplace_back(cayley(LinearRelation::from_operator(t.matrix(), tol)), true);
    }
    for (int i = 0; i < 2; ++i) {
      SymmetricMatrix t = embed(kd, random_extension(rng, kd.pair).matrix());
      candidates.emplace_back(cayley(LinearRelation::from_operator(t.matrix(), tol)), false);
    }
    for (const auto& [at, member] : candidates) {
      MembershipReport m = membership_report(kd, at, tol);
      r.check(m.agree(), "membership characterizations disagree");
      if (member) {
        r.check(m.by_index, "constructed member fails the index test");
        double mu = uniform_lower_bound(kd, at, tol);
        for (double off : {0.1, 1.0, 10.0})
          r.check(resolvent_interval_check(kd, at, -mu + off, tol), "resolvent inequalities fail");
      }
      r.count(m.by_index ? "members" : "non_members");
    }
    DualityDistances dd = inverse_duality_distances(kd, tol);
    r.bound(std::max(dd.friedrichs, dd.krein), 1e-8, "inverse duality");
  });
}

// Ordered pairs H₁ ≤ H₂, matrices or relations, with deliberate index changes.
inline CaseResult antitonicity_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    Index n = rng.integer(1, 5);
    Vector v(n);
    for (Index i = 0; i < n; ++i) v(i) = (rng.coin(0.4) ? -1.0 : 1.0) * rng.uniform(0.2, 3.0);
    bool flip = rng.coin(0.4);
    if (rng.coin()) {
      DenseMatrix q = random_orthogonal(rng, n);
      SymmetricMatrix h1(DenseMatrix(q * v.asDiagonal() * q.transpose()));
      DenseMatrix p = DenseMatrix::Zero(n, n);
      for (Index i = 0; i < n; ++i) {
        double c = 0.0;
        if (flip && v(i) < 0) {
          c = -v(i) + rng.uniform(0.3, 2.0);
        } else if (rng.coin()) {
          c = rng.uniform(0.0, v(i) < 0 ? -0.8 * v(i) : 2.0);
        }
        p += c * q.col(i) * q.col(i).transpose();
      }
      SymmetricMatrix h2 = h1 + SymmetricMatrix(p);
      if (rng.coin(0.3)) h2 = h2 + congruence(rng.gaussian(1, n) * 0.3, SymmetricMatrix::identity(1));
      if (!well_separated(h2, 0.02, tol) || inertia_of(h2, tol).n_zero > 0) {
        r.count("rejected");
        return;
      }
      bool holds = antitonicity_check(h1, h2, tol);
      r.count(holds ? "matrix_holds" : "matrix_fails");
    } else {
      Index mul = rng.integer(0, 1);
      LinearRelation h1 = random_selfadjoint_relation(rng, v, mul, tol);
      OperatorPart p1 = operator_part(h1, tol);
      double a = lower_bound(p1) - rng.uniform(0.3, 2.0);
      SymmetricMatrix r1 = resolvent(p1, a);
      Index m = n + mul;
      Vector c(m);
      for (Index i = 0; i < m; ++i) c(i) = rng.coin(0.1) ? 0.0 : rng.uniform(flip ? 0.02 : 0.5, 0.98);
      DenseMatrix root = Spectrum(r1, tol).modulus_power(0.5).matrix();
      SymmetricMatrix r2(DenseMatrix(root * random_with_spectrum(rng, c).matrix() * root));
      LinearRelation h2 = relation_from_resolvent(r2, a, tol);
      OperatorPart p2 = operator_part(h2, tol);
      if (p2.op.dim() > 0) {
        Spectrum s2(p2.op, tol);
        bool ok = s2.inertia().n_zero == 0;
        for (Index i = 0; i < s2.dim(); ++i) ok = ok && std::abs(s2.values()(i)) > 0.02 && std::abs(s2.values()(i)) < 1e6;
        if (!ok) {
          r.count("rejected");
          return;
        }
      }
      bool holds = antitonicity_check(h1, h2, tol);
      r.count(holds ? "relation_holds" : "relation_fails");
    }
  });
}

inline CaseResult uniqueness_case(Rng& rng, const Tolerance& tol) {
  return guarded([&](CaseResult& r) {
    bool unique = rng.coin(0.4);
    SymmetricColumn col = random_relation_column(rng, unique);
    LinearRelation a = relation_from_column(rng, col, tol);
    KreinData kd = krein_data(a, tol);
    UniquenessReport u = uniqueness_report(kd, tol, rng.integer(0, 1 << 30));
    r.check(u.agree(), "gap, rank and relation uniqueness tests disagree");
    r.check(u.gap_zero == krein_uniqueness_criterion(col, tol), "column-level criterion disagrees");
    r.check(!unique || u.gap_zero, "isometric V must give A_F = A_K");
    r.bound(u.translation, 1e-10, "translation identities");
    r.count(u.gap_zero ? "unique" : "not_unique");
  });
}

}  // namespace checks

// ---- suites ----

struct SuiteReport {
  std::string name;
  Index cases = 0;
  Index passed = 0;
  Index failed = 0;
  double max_residual = 0.0;
  std::map<std::string, Index> tally;
  std::vector<std::string> failures;  // first few, "case i: message"
  double seconds = 0.0;
};

using CaseFn = std::function<CaseResult(Rng&, const Tolerance&)>;

struct SuiteSpec {
  std::string name;
  std::vector<CaseFn> parts;
};

inline const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> all = {
      {"completion", {checks::completion_case, checks::schur_inertia_case}},
      {"factor", {checks::inertia_balance_case, checks::factor_case}},
      {"lifting", {checks::lift_case}},
      {"quasicontraction", {checks::split_counts_case, checks::extremal_case}},
      {"relations",
       {checks::relation_algebra_case, checks::extension_case, checks::antitonicity_case,
        checks::uniqueness_case}},
  };
  return all;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& s : suites()) names.push_back(s.name);
  return names;
}

inline SuiteReport run_suite(const SuiteSpec& spec, std::uint64_t stream, std::uint64_t seed, Index cases,
                             const Tolerance& tol, std::size_t keep_failures = 5) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.name = spec.name;
  rep.cases = cases;
  for (Index i = 0; i < cases; ++i) {
    CaseResult total;
    for (std::size_t p = 0; p < spec.parts.size(); ++p) {
      Rng rng(case_seed(seed, 16 * stream + p, static_cast<std::uint64_t>(i)));
      total.merge(spec.parts[p](rng, tol));
    }
    if (total.ok) {
      ++rep.passed;
    } else {
      ++rep.failed;
      if (rep.failures.size() < keep_failures) rep.failures.push_back("case " + std::to_string(i) + ": " + total.failure);
    }
    rep.max_residual = std::max(rep.max_residual, total.residual);
    for (const auto& [k, v] : total.tally) rep.tally[k] += v;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::vector<SuiteReport> run_suites(const std::string& which, std::uint64_t seed, Index cases,
                                           const Tolerance& tol) {
  std::vector<SuiteReport> out;
  bool found = false;
  const auto& all = suites();
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (which == "all" || which == all[k].name) {
      found = true;
      out.push_back(run_suite(all[k], k, seed, cases, tol));
    }
  }
  require(found, ErrorKind::InvalidInput, "unknown suite: " + which);
  return out;
}

}  // namespace kreinkit
