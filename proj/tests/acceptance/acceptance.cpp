// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "kreinkit/verify.hpp"

using namespace kreinkit;

namespace {

constexpr std::uint64_t kSeed = 20240611;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Tally {
  Index cases = 0, failed = 0;
  double max_residual = 0.0;
  std::map<std::string, Index> counts;
  std::string first_failure;

  void add(const CaseResult& r) {
    ++cases;
    max_residual = std::max(max_residual, r.residual);
    for (const auto& [k, v] : r.tally) counts[k] += v;
    if (!r.ok) {
      ++failed;
      if (first_failure.empty()) first_failure = r.failure;
    }
  }

  Index count(const std::string& k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
};

Tally run_cases(const CaseFn& fn, std::uint64_t stream, Index n, const Tolerance& tol) {
  Tally t;
  for (Index i = 0; i < n; ++i) {
    Rng rng(case_seed(kSeed, stream, static_cast<std::uint64_t>(i)));
    t.add(fn(rng, tol));
  }
  return t;
}

bool all_ok = true;

void report(int id, bool pass, const std::string& what, const std::string& detail) {
  all_ok = all_ok && pass;
  std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << what << "  [" << detail << "]"
            << std::endl;
}

std::string failures(const Tally& t) {
  return t.failed ? "; first failure: " + t.first_failure : std::string();
}

// 500 random blocks: index of the minimal completion and factorization residuals.
void criterion1(const Tolerance& tol) {
  auto t0 = Clock::now();
  Tally t;
  Index by_kappa[3] = {0, 0, 0};
  for (Index i = 0; i < 500; ++i) {
    Rng rng(case_seed(kSeed, 1, static_cast<std::uint64_t>(i)));
    t.add(guarded([&](CaseResult& r) {
      CompletionInstance in = random_completion(rng);
      CompletionSolution sol = minimal_completion(in.blk, tol);
      r.check(sol.kappa == in.kappa, "ν₋(A11) differs from the prescribed index");
      r.check(inertia_of(assemble(in.blk, sol.a22_min), tol).n_minus == in.kappa,
              "minimal completion has the wrong negative index");
      r.bound(sol.residual / (1.0 + norm2(in.blk.a12)), 1e-9, "factorization");
      r.bound(checks::rel(sol.a22_min.matrix(), (sol.s.transpose() * sol.j.matrix() * sol.s).eval()), 1e-9,
              "minimal corner");
      if (in.kappa <= 2) ++by_kappa[in.kappa];
    }));
  }
  double secs = seconds_since(t0);
  bool pass = t.failed == 0 && secs < 10.0 && by_kappa[0] && by_kappa[1] && by_kappa[2];
  std::ostringstream d;
  d << t.cases << " instances, kappa 0/1/2 = " << by_kappa[0] << "/" << by_kappa[1] << "/" << by_kappa[2]
    << ", failed " << t.failed << ", max residual " << t.max_residual << " (limit 1e-9), " << secs
    << " s (limit 10 s)" << failures(t);
  report(1, pass, "minimal completion keeps the negative index of A11", d.str());
}

// Same instances, 5 PSD and 5 indefinite perturbations of the minimal corner each.
void criterion2(const Tolerance& tol) {
  Tally t;
  Index agree = 0, total = 0;
  for (Index i = 0; i < 500; ++i) {
    Rng rng(case_seed(kSeed, 1, static_cast<std::uint64_t>(i)));
    CompletionInstance in = random_completion(rng);
    Rng yr(case_seed(kSeed, 2, static_cast<std::uint64_t>(i)));
    t.add(guarded([&](CaseResult& r) {
      CompletionSolution sol = minimal_completion(in.blk, tol);
      for (int k = 0; k < 10; ++k) {
        bool psd = k < 5;
        SymmetricMatrix y = psd ? checks::random_psd(yr, in.blk.n2()) : checks::random_indefinite(yr, in.blk.n2());
        SymmetricMatrix a22 = sol.a22_min + y;
        bool by_order = is_solution(in.blk, a22, tol);
        bool by_count = inertia_of(assemble(in.blk, a22), tol).n_minus == in.kappa;
        ++total;
        agree += by_order == by_count;
        r.check(by_order == by_count, "Loewner membership disagrees with the eigen count");
        r.check(by_order == psd, "membership verdict contradicts the sign of Y");
      }
    }));
  }
  std::ostringstream d;
  d << agree << "/" << total << " verdicts agree (required 100%)" << failures(t);
  report(2, t.failed == 0 && agree == total && total == 5000, "solution set is a22_min + {Y >= 0}", d.str());
}

void criterion3(const Tolerance& tol) {
  auto t0 = Clock::now();
  Tally balance = run_cases(checks::inertia_balance_case, 3, 1000, tol);
  Tally schur = run_cases(checks::schur_inertia_case, 4, 1000, tol);
  Tally split = run_cases(checks::split_counts_case, 5, 1000, tol);
  double secs = seconds_since(t0);
  bool pass = balance.failed == 0 && schur.failed == 0 && split.failed == 0 && secs < 10.0;
  std::ostringstream d;
  d << "J-Gram balance " << balance.cases - balance.failed << "/" << balance.cases << ", Schur complement "
    << schur.cases - schur.failed << "/" << schur.cases << ", split I-T^2 " << split.cases - split.failed << "/"
    << split.cases << ", " << secs << " s (limit 10 s)" << failures(balance) << failures(schur) << failures(split);
  report(3, pass, "integer inertia identities hold exactly", d.str());
}

void criterion4(const Tolerance& tol) {
  Tally t = run_cases(checks::lift_case, 6, 200, tol);
  std::ostringstream d;
  d << t.cases - t.failed << "/" << t.cases << " lifts, max relative residual " << t.max_residual
    << " (limit 1e-8), lifted indices asserted exactly" << failures(t);
  report(4, t.failed == 0, "lift, extract, lift reproduces the lifting", d.str());
}

void criterion5(const Tolerance& tol) {
  Tally t = run_cases(checks::extremal_case, 7, 500, tol);
  Index points = t.count("points"), members = t.count("members");
  std::ostringstream d;
  d << t.cases - t.failed << "/" << t.cases << " columns, " << points << " grid points (" << members
    << " members), max residual " << t.max_residual << " (limit 1e-9)" << failures(t);
  bool pass = t.failed == 0 && points == 21 * t.cases && members > 0 && members < points;
  report(5, pass, "order interval [T_m, T_M] matches the index test", d.str());
}

void criterion6(const Tolerance& tol) {
  // e₁ ↦ e₁ on span{e₁} ⊂ ℝ²
  double dk = 1.0, df = 1.0;
  std::string example_error;
  try {
    DenseMatrix f(2, 1), fp(2, 1);
    f << 1, 0;
    fp << 1, 0;
    LinearRelation a = LinearRelation::from_generators(f, fp, tol);
    auto [af, ak] = friedrichs_krein(a, tol);
    DenseMatrix dk_op = DenseMatrix::Zero(2, 2);
    dk_op(0, 0) = 1.0;
    DenseMatrix gf(2, 2), gfp(2, 2);
    gf << 1, 0, 0, 0;
    gfp << 1, 0, 0, 1;
    dk = relation_distance(ak, LinearRelation::from_operator(dk_op, tol));
    df = relation_distance(af, LinearRelation::from_generators(gf, gfp, tol));
  } catch (const std::exception& e) {
    example_error = e.what();
  }
  Tally t = run_cases(checks::extension_case, 8, 200, tol);
  Index checked = t.count("members") + t.count("non_members");
  std::ostringstream d;
  d << "worked example distances A_K " << dk << ", A_F " << df << " (limit 1e-9); " << t.cases - t.failed << "/"
    << t.cases << " relations, " << checked << " membership triples (" << t.count("members") << " members), "
    << "max duality distance " << t.max_residual << " (limit 1e-8)" << failures(t);
  if (!example_error.empty()) d << "; example error: " << example_error;
  bool pass = example_error.empty() && dk <= 1e-9 && df <= 1e-9 && t.failed == 0 && t.count("non_members") > 0;
  report(6, pass, "Friedrichs and Krein-von Neumann extensions", d.str());
}

// 500 accepted ordered pairs; ill-conditioned draws are redrawn.
void criterion7(const Tolerance& tol) {
  Tally t;
  Index accepted = 0, drawn = 0;
  while (accepted < 500 && drawn < 20000) {
    Rng rng(case_seed(kSeed, 9, static_cast<std::uint64_t>(drawn++)));
    CaseResult r = checks::antitonicity_case(rng, tol);
    if (r.ok && r.tally.count("rejected")) continue;
    ++accepted;
    t.add(r);
  }
  Index holds = t.count("matrix_holds") + t.count("relation_holds");
  Index fails = t.count("matrix_fails") + t.count("relation_fails");
  std::ostringstream d;
  d << accepted << " pairs (" << drawn - accepted << " redrawn), inverse order holds " << holds
    << ", fails with inertia mismatch " << fails << ", matrix/relation " << t.count("matrix_holds") + t.count("matrix_fails")
    << "/" << t.count("relation_holds") + t.count("relation_fails") << failures(t);
  bool pass = accepted == 500 && t.failed == 0 && holds > 0 && fails > 0;
  report(7, pass, "inverse order reverses iff negative indices agree", d.str());
}

void criterion8(const Tolerance& tol) {
  Tally t = run_cases(checks::uniqueness_case, 10, 200, tol);
  std::ostringstream d;
  d << t.cases - t.failed << "/" << t.cases << " relations agree (" << t.count("unique") << " unique, "
    << t.count("not_unique") << " not), max translation residual " << t.max_residual << " (limit 1e-10)"
    << failures(t);
  bool pass = t.failed == 0 && t.count("unique") > 0 && t.count("not_unique") > 0;
  report(8, pass, "uniqueness tests agree", d.str());
}

void criterion9() {
  std::string cmd = std::string(KREINKIT_CLI_PATH) + " verify --suite all --seed 7 --cases 100 > /dev/null";
  auto t0 = Clock::now();
  int status = std::system(cmd.c_str());
  double secs = seconds_since(t0);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ostringstream d;
  d << "exit " << code << ", " << secs << " s (limit 60 s)";
  report(9, code == 0 && secs < 60.0, "kreinkit verify --suite all --seed 7 --cases 100", d.str());
}

}  // namespace

int main() {
  Tolerance tol = default_tolerance();
  criterion1(tol);
  criterion2(tol);
  criterion3(tol);
  criterion4(tol);
  criterion5(tol);
  criterion6(tol);
  criterion7(tol);
  criterion8(tol);
  criterion9();
  std::cout << (all_ok ? "all criteria pass" : "some criteria fail") << std::endl;
  return all_ok ? 0 : 1;
}
