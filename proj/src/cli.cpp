#include "hermcodes/cli.hpp"

#include <chrono>
#include <sstream>

#include "CLI11.hpp"

#include "hermcodes/codefile.hpp"
#include "hermcodes/constructions.hpp"
#include "hermcodes/equivalence.hpp"
#include "hermcodes/scheme.hpp"
#include "hermcodes/verify.hpp"

namespace hermcodes {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 0;
  bool timing = false;

  // construct
  std::string family;
  std::uint64_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 2;
  std::int64_t s = 1;
  std::optional<std::uint64_t> gamma_index, alpha_index;
  std::string out_path;

  std::string code_path, against_path;
  std::string method = "dual-code";
  std::vector<std::string> checks;
};

Json stats_json(const HermCode& c, DualMethod method, std::uint64_t budget) {
  const auto inner = inner_distribution(c, budget);
  const auto dual = dual_inner_distribution(c, method, budget);
  const int md = min_distance(inner);
  return {{"size", big_to_json(c.size())},
          {"min_distance", md},
          {"inner", big_vector_to_json(inner)},
          {"dual_inner", big_vector_to_json(dual)},
          {"design_strength", design_strength(dual)},
          {"bound_saturated", bound_saturated(c, md)}};
}

Json fingerprint_json(const Fingerprint& f) {
  return {{"size", big_to_json(f.size)},
          {"inner", big_vector_to_json(f.inner)},
          {"dual_inner", big_vector_to_json(f.dual_inner)},
          {"design_strength", f.design_strength},
          {"kernel_order", big_to_json(f.kernel_order)},
          {"left_idealiser_order", big_to_json(f.left_order)},
          {"right_idealiser_order", big_to_json(f.right_order)},
          {"support_size", f.support_size}};
}

DualMethod parse_method(const std::string& m) {
  if (m == "dual-code") return DualMethod::DualCode;
  if (m == "eigenvalues") return DualMethod::Eigenvalues;
  if (m == "both") return DualMethod::Both;
  throw std::invalid_argument("--method must be dual-code, eigenvalues or both");
}

int cmd_construct(const Options& o, std::ostream& out) {
  ConstructionParams p;
  p.family = parse_family(o.family);
  p.q = o.q;
  p.n = o.n;
  p.d = o.d;
  p.s = o.s;
  validate(p);
  const TowerPtr tower = tower_for(p);
  if (o.gamma_index) p.gamma = tower->pow(tower->generator(), *o.gamma_index);
  if (o.alpha_index) p.alpha = tower->pow(tower->generator(), *o.alpha_index);
  const HermCode c = build(tower, p);
  if (o.out_path.empty()) {
    out << code_to_json(c).dump(1) << '\n';
  } else {
    write_code_file(o.out_path, c);
    const Json summary{{"label", c.label()},
                       {"size", big_to_json(c.size())},
                       {"declared_d", c.declared_d() ? Json(*c.declared_d()) : Json(nullptr)},
                       {"out", o.out_path}};
    out << summary.dump() << '\n';
  }
  return 0;
}

int cmd_stats(const Options& o, std::ostream& out) {
  const HermCode c = read_code_file(o.code_path);
  out << stats_json(c, parse_method(o.method), o.budget).dump(1) << '\n';
  return 0;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const HermCode d = dual_code(read_code_file(o.code_path));
  if (o.out_path.empty()) {
    out << code_to_json(d).dump(1) << '\n';
  } else {
    write_code_file(o.out_path, d);
    out << Json{{"label", d.label()}, {"size", big_to_json(d.size())}, {"out", o.out_path}}.dump() << '\n';
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const HermCode c = read_code_file(o.code_path);
  std::vector<std::string> checks = o.checks;
  if (checks.empty()) checks = known_checks();
  for (const auto& name : checks)
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
      throw std::invalid_argument("unknown check '" + name + "'");

  Json reports = Json::array();
  bool failed = false, budget = false;
  for (const auto& name : checks) {
    const Report r = run_check(c, name, o.budget);
    failed = failed || r.verdict == "fail";
    budget = budget || r.budget_exceeded;
    reports.push_back(report_to_json(r, o.timing));
  }
  const std::string overall = failed ? "fail" : (budget ? "inconclusive" : "pass");
  const Json doc{{"code", c.label()},
                 {"params", {{"q", c.field().q()}, {"n", c.n()}, {"declared_d", c.declared_d() ? Json(*c.declared_d()) : Json(nullptr)}}},
                 {"reports", std::move(reports)},
                 {"verdict", overall}};
  out << doc.dump(1) << '\n';
  return failed ? kExitFail : (budget ? kExitBudget : 0);
}

int cmd_eigenvalues(const Options& o, std::ostream& out) {
  const auto [p, e] = split_prime_power(o.q);
  const TowerPtr tower = FieldTower::make(p, e, o.n);
  const auto table = eigenvalues(tower, o.budget);
  Json rows = Json::array();
  for (const auto& row : table.q) rows.push_back(big_vector_to_json(row));
  out << Json{{"q", o.q}, {"n", o.n}, {"Q", std::move(rows)}}.dump(1) << '\n';
  return 0;
}

int cmd_fingerprint(const Options& o, std::ostream& out) {
  const HermCode a = read_code_file(o.code_path);
  const Fingerprint fa = invariant_fingerprint(a, o.budget);
  if (o.against_path.empty()) {
    out << fingerprint_json(fa).dump(1) << '\n';
    return 0;
  }
  const HermCode b = read_code_file(o.against_path);
  const Fingerprint fb = invariant_fingerprint(b, o.budget);
  const auto cmp = compare_fingerprints(fa, fb);
  const Json doc{{"a", {{"label", a.label()}, {"fingerprint", fingerprint_json(fa)}}},
                 {"b", {{"label", b.label()}, {"fingerprint", fingerprint_json(fb)}}},
                 {"verdict", cmp.verdict},
                 {"differences", cmp.differences}};
  out << doc.dump(1) << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Maximum additive Hermitian rank-metric codes"};
  app.require_subcommand(1);
  app.add_option("--budget", o.budget, "cap on enumerated objects")->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads (0 = hardware)");
  app.add_flag("--timing", o.timing, "add wall-clock times to reports");

  auto* construct = app.add_subcommand("construct", "build a code family and write its code file");
  construct->add_option("--family", o.family, "H, E, M, Htilde or HtildeDual")->required();
  construct->add_option("--q", o.q)->required();
  construct->add_option("--n", o.n)->required();
  construct->add_option("--d", o.d);
  construct->add_option("--s", o.s);
  construct->add_option("--gamma", o.gamma_index, "use g^idx as gamma");
  construct->add_option("--alpha", o.alpha_index, "use g^idx as alpha");
  construct->add_option("--out", o.out_path);

  auto* stats = app.add_subcommand("stats", "distributions and design strength");
  stats->add_option("--code", o.code_path)->required();
  stats->add_option("--method", o.method, "dual-code, eigenvalues or both")->capture_default_str();

  auto* dual = app.add_subcommand("dual", "write the dual code");
  dual->add_option("--code", o.code_path)->required();
  dual->add_option("--out", o.out_path);

  auto* verify = app.add_subcommand("verify", "run named checks");
  verify->add_option("--code", o.code_path)->required();
  verify->add_option("--checks", o.checks, "comma-separated subset of bound,distance,theorem3,designs,kernel,idealisers,dual")
      ->delimiter(',');

  auto* eig = app.add_subcommand("eigenvalues", "Q_k(i) table of the Hermitian scheme");
  eig->add_option("--q", o.q)->required();
  eig->add_option("--n", o.n)->required();

  auto* fp = app.add_subcommand("fingerprint", "equivalence invariants");
  fp->add_option("--code", o.code_path)->required();
  fp->add_option("--against", o.against_path, "second code to compare with");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  set_thread_count(o.threads);
  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*construct) code = cmd_construct(o, out);
    else if (*stats) code = cmd_stats(o, out);
    else if (*dual) code = cmd_dual(o, out);
    else if (*verify) code = cmd_verify(o, out);
    else if (*eig) code = cmd_eigenvalues(o, out);
    else if (*fp) code = cmd_fingerprint(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  if (o.timing)
    err << "wall time: "
        << std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() << " ms\n";
  return code;
}

}  // namespace hermcodes
