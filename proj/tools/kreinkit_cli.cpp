#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kreinkit/io.hpp"
#include "kreinkit/verify.hpp"

using namespace kreinkit;
using io::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kInfeasible = 2, kInvalid = 3 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotCompletable:
    case ErrorKind::NotSolvable:
    case ErrorKind::HypothesisViolated:
    case ErrorKind::KNotJContractive:
    case ErrorKind::NegativeTargetIndex:
    case ErrorKind::RangeInclusionFailed:
    case ErrorKind::IndexMismatch:
    case ErrorKind::NotJContractive:
    case ErrorKind::CayleyNotOperator:
      return kInfeasible;
    case ErrorKind::AssertionFailed:
    case ErrorKind::NonConvergence:
      return kVerifyFailed;
    default:
      return kInvalid;
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

Tolerance tol() { return default_tolerance(); }

SymmetricMatrix read_symmetric(const std::string& path) {
  return SymmetricMatrix::checked(io::read_matrix(path), tol().residual);
}

// "1,-1,1" → diag(1, −1, 1)
JSpace parse_signature(const std::string& text) {
  std::vector<double> signs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    double v = 0;
    try {
      v = std::stod(item);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidInput, "signature entries must be 1 or -1");
    }
    require(v == 1.0 || v == -1.0, ErrorKind::InvalidInput, "signature entries must be 1 or -1");
    signs.push_back(v);
  }
  Vector d(static_cast<Index>(signs.size()));
  for (std::size_t i = 0; i < signs.size(); ++i) d(static_cast<Index>(i)) = signs[i];
  return JSpace(SymmetricMatrix::diagonal(d));
}

JSpace signature_or_identity(const std::string& text, Index n) {
  if (text.empty()) return JSpace::identity(n);
  JSpace j = parse_signature(text);
  require_dims(j.dim() == n, "signature length does not match the matrix dimension");
  return j;
}

DenseMatrix matrix_or_zero(const std::string& path, Index rows, Index cols) {
  if (path.empty()) return DenseMatrix::Zero(rows, cols);
  DenseMatrix m = io::read_matrix(path);
  require_dims(m.rows() == rows && m.cols() == cols, "parameter matrix has the wrong shape");
  return m;
}

int cmd_inertia(const std::string& path) {
  json doc = io::read_json(path);
  if (io::is_relation_document(doc)) {
    LinearRelation a = io::relation_from_json(doc, tol());
    emit(io::inertia_to_json(relation_inertia(a, tol())));
  } else {
    SymmetricMatrix m = SymmetricMatrix::checked(io::matrix_from_json(doc), tol().residual);
    emit(io::inertia_to_json(inertia_of(m, tol())));
  }
  return kOk;
}

int cmd_complete(const std::string& a11_path, const std::string& a12_path, const std::string& a22_path) {
  IncompleteBlock blk(read_symmetric(a11_path), io::read_matrix(a12_path));
  CompletionSolution sol;
  try {
    sol = minimal_completion(blk, tol());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCompletable) throw;
    json out{{"completable", false}, {"message", e.what()}};
    if (e.residual()) out["residual"] = *e.residual();
    emit(out);
    return kInfeasible;
  }
  json out{{"completable", true},
           {"S", io::matrix_to_json(sol.s)},
           {"J", io::matrix_to_json(sol.j.matrix())},
           {"a22_min", io::matrix_to_json(sol.a22_min.matrix())},
           {"kappa", sol.kappa},
           {"residual", sol.residual}};
  if (!a22_path.empty()) {
    SymmetricMatrix a22 = read_symmetric(a22_path);
    out["solution"] = is_solution(blk, a22, tol());
    out["inertia"] = io::inertia_to_json(inertia_of(assemble(blk, a22), tol()));
  }
  emit(out);
  return kOk;
}

SymmetricColumn read_column(const std::string& t11_path, const std::string& t21_path) {
  return SymmetricColumn(read_symmetric(t11_path), io::read_matrix(t21_path));
}

int report_unsolvable(const SymmetricColumn& col) {
  SolvabilityCounts c = solvability_counts(col, tol());
  emit(json{{"solvable", false}, {"nu_minus_t11", c.lhs}, {"nu_minus_column", c.rhs}});
  return kInfeasible;
}

int cmd_extremes(const std::string& t11_path, const std::string& t21_path) {
  SymmetricColumn col = read_column(t11_path, t21_path);
  if (!solvable(col, tol())) return report_unsolvable(col);
  ExtremalPair p = extremal_extensions(col, tol());
  SymmetricMatrix gap = uniqueness_gap(p, tol());
  emit(json{{"solvable", true},
            {"T_m", io::matrix_to_json(p.t_m.matrix())},
            {"T_M", io::matrix_to_json(p.t_M.matrix())},
            {"kappa", p.kappa},
            {"kappa_plus", p.kappa_plus},
            {"kappa_minus", p.kappa_minus},
            {"unique", krein_uniqueness_criterion(col, tol())},
            {"gap", io::matrix_to_json(gap.matrix())}});
  return kOk;
}

int cmd_check_interval(const std::string& t11_path, const std::string& t21_path, const std::string& t_path) {
  SymmetricColumn col = read_column(t11_path, t21_path);
  if (!solvable(col, tol())) return report_unsolvable(col);
  ExtremalPair p = extremal_extensions(col, tol());
  SymmetricMatrix t = read_symmetric(t_path);
  bool by_order = is_member(p, t, tol());
  bool by_index = index_member(p, t, tol());
  emit(json{{"member", by_order}, {"index_member", by_index}, {"agree", by_order == by_index}});
  return by_order == by_index ? kOk : kVerifyFailed;
}

struct LiftArgs {
  std::string t, j1, j2, j1p, j2p, gamma1, gamma2, gamma;
};

int cmd_lift(const LiftArgs& a) {
  DenseMatrix t = io::read_matrix(a.t);
  JSpace j1 = signature_or_identity(a.j1, t.cols());
  JSpace j2 = signature_or_identity(a.j2, t.rows());
  JSpace j1p = parse_signature(a.j1p), j2p = parse_signature(a.j2p);
  JContractionData d = defect_data(t, j1, j2, tol());
  LiftParameters p;
  p.gamma1 = matrix_or_zero(a.gamma1, t.rows(), j1p.dim());
  p.gamma2 = matrix_or_zero(a.gamma2, j2p.dim(), t.cols());
  p.gamma = matrix_or_zero(a.gamma, j2p.dim(), j1p.dim());
  DenseMatrix tt = lift(d, p, j1p, j2p, tol());
  emit(json{{"lift", io::matrix_to_json(tt)},
            {"kappa1", d.kappa1},
            {"kappa2", d.kappa2},
            {"lifted_kappa1", d.kappa1 - j2p.n_minus()},
            {"lifted_kappa2", d.kappa2 - j1p.n_minus()},
            {"link_identities", verify_link_identities(d, tol())}});
  return kOk;
}

// 𝒞 is an involution, so the inverse transform coincides with 𝒞 itself.
int cmd_cayley(const std::string& path, bool inverse_transform) {
  LinearRelation a = io::read_relation(path, tol());
  json out = io::relation_to_json(cayley(a), tol());
  out["transform"] = inverse_transform ? "inverse" : "forward";
  emit(out);
  return kOk;
}

int cmd_extensions(const std::string& path, const std::string& member_path) {
  LinearRelation a = io::read_relation(path, tol());
  KreinData kd;
  try {
    kd = krein_data(a, tol());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotSolvable && e.kind() != ErrorKind::CayleyNotOperator) throw;
    emit(json{{"solvable", false}, {"message", e.what()}});
    return kInfeasible;
  }
  json out{{"solvable", true},
           {"kappa", kd.kappa},
           {"A_F", io::relation_to_json(kd.a_f, tol())},
           {"A_K", io::relation_to_json(kd.a_k, tol())},
           {"unique", krein_uniqueness_relation(a, tol())}};
  int code = kOk;
  if (!member_path.empty()) {
    LinearRelation at = io::read_relation(member_path, tol());
    MembershipReport m = membership_report(kd, at, tol());
    out["member"] = m.by_cayley;
    out["membership"] = json{{"cayley", m.by_cayley}, {"order", m.by_order}, {"index", m.by_index}};
    if (!m.agree()) code = kVerifyFailed;
  }
  emit(out);
  return code;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, Index cases) {
  require(cases >= 0, ErrorKind::InvalidInput, "--cases must be non-negative");
  std::vector<SuiteReport> reps = run_suites(suite, seed, cases, tol());
  json arr = json::array();
  bool all_ok = true;
  for (const auto& r : reps) {
    all_ok = all_ok && r.failed == 0;
    arr.push_back(json{{"suite", r.name},
                       {"cases", r.cases},
                       {"passed", r.passed},
                       {"failed", r.failed},
                       {"max_residual", r.max_residual},
                       {"tally", r.tally},
                       {"failures", r.failures}});
  }
  emit(json{{"seed", seed}, {"cases", cases}, {"suites", arr}, {"ok", all_ok}});
  return all_ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indefinite completions, liftings and extremal extensions"};
  app.require_subcommand(1);
  double tol_override = 0.0;
  auto* tol_opt = app.add_option("--tol", tol_override, "uniform tolerance for every numerical test");

  std::function<int()> action;

  std::string path, a11, a12, a22, t11, t21, tpath, member;
  auto* inertia = app.add_subcommand("inertia", "inertia of a symmetric matrix or selfadjoint relation");
  inertia->add_option("file", path, "MatrixFile or RelationFile ('-' for stdin)")->required();
  inertia->callback([&] { action = [&] { return cmd_inertia(path); }; });

  auto* complete = app.add_subcommand("complete", "minimal completion of a 2x2 block with unknown corner");
  complete->add_option("a11", a11)->required();
  complete->add_option("a12", a12)->required();
  complete->add_option("--with-a22", a22, "test a candidate corner");
  complete->callback([&] { action = [&] { return cmd_complete(a11, a12, a22); }; });

  auto* extremes = app.add_subcommand("extremes", "extremal quasi-contractive extensions of a column");
  extremes->add_option("t11", t11)->required();
  extremes->add_option("t21", t21)->required();
  extremes->callback([&] { action = [&] { return cmd_extremes(t11, t21); }; });

  auto* interval = app.add_subcommand("check-interval", "membership of T in [T_m, T_M]");
  interval->add_option("t11", t11)->required();
  interval->add_option("t21", t21)->required();
  interval->add_option("t", tpath)->required();
  interval->callback([&] { action = [&] { return cmd_check_interval(t11, t21, tpath); }; });

  LiftArgs la;
  auto* lift_cmd = app.add_subcommand("lift", "lift T with parameters (Γ₁, Γ₂, Γ)");
  lift_cmd->add_option("t", la.t)->required();
  lift_cmd->add_option("--j1", la.j1, "signature of the domain, e.g. 1,-1 (default identity)");
  lift_cmd->add_option("--j2", la.j2, "signature of the codomain (default identity)");
  lift_cmd->add_option("--j1p", la.j1p, "signature of the added domain space")->required();
  lift_cmd->add_option("--j2p", la.j2p, "signature of the added codomain space")->required();
  lift_cmd->add_option("--gamma1", la.gamma1, "Γ₁ matrix file (default zero)");
  lift_cmd->add_option("--gamma2", la.gamma2, "Γ₂ matrix file (default zero)");
  lift_cmd->add_option("--gamma", la.gamma, "Γ matrix file (default zero)");
  lift_cmd->callback([&] { action = [&] { return cmd_lift(la); }; });

  bool inverse_flag = false;
  auto* cay = app.add_subcommand("cayley", "Cayley transform of a linear relation");
  cay->add_option("file", path)->required();
  cay->add_flag("--inverse", inverse_flag, "apply the inverse transform");
  cay->callback([&] { action = [&] { return cmd_cayley(path, inverse_flag); }; });

  auto* ext = app.add_subcommand("extensions", "Friedrichs and Krein-von Neumann extensions of a relation");
  ext->add_option("file", path)->required();
  ext->add_option("--member", member, "test a selfadjoint extension for membership");
  ext->callback([&] { action = [&] { return cmd_extensions(path, member); }; });

  std::string suite = "all";
  std::uint64_t seed = 7;
  Index cases = 100;
  auto* verify = app.add_subcommand("verify", "run the randomized property suites");
  verify->add_option("--suite", suite)->check(
      CLI::IsMember({"completion", "factor", "lifting", "quasicontraction", "relations", "all"}));
  verify->add_option("--seed", seed);
  verify->add_option("--cases", cases);
  verify->callback([&] { action = [&] { return cmd_verify(suite, seed, cases); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (tol_opt->count()) set_default_tolerance(Tolerance::uniform(tol_override));
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
}
