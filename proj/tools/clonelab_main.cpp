#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clonelab/clonelab.hpp"

namespace {

using nlohmann::json;
using namespace clonelab;

Rule rule_from_flags(const std::string& name, int k) {
  if (name == "plurality") return Rule::plurality();
  if (name == "veto") return Rule::veto();
  if (name == "borda") return Rule::borda();
  if (name == "kapproval") return Rule::k_approval(k);
  if (name == "runoff") return Rule::runoff();
  if (name == "maximin") return Rule::maximin();
  if (name == "copeland") return Rule::copeland();
  throw Error("unknown rule '" + name + "'");
}

SuccessMode mode_from_flag(const std::string& s) {
  if (s == "0plus") return SuccessMode::zero_plus();
  if (s == "1") return SuccessMode::one();
  return SuccessMode::threshold(Rational::parse(s));
}

int candidate_index(const Election& e, const std::string& name) {
  return e.candidate(name);
}

CloningVector vector_from_flag(const Election& e, const std::string& s) {
  CloningVector v(e.num_candidates(), 1);
  for (const auto& piece : detail::split(s, ',')) {
    std::string entry = detail::trim(piece);
    if (entry.empty()) continue;
    auto eq = entry.rfind('=');
    if (eq == std::string::npos)
      throw Error("expected name=count in '" + entry + "'");
    int c = candidate_index(e, detail::trim(entry.substr(0, eq)));
    std::string count = detail::trim(entry.substr(eq + 1));
    long long k = detail::parse_count(0, count, "clone count");
    if (k < 1 || k > 255) throw InvalidSize("clone counts must be in 1..255");
    v[c] = static_cast<int>(k);
  }
  return v;
}

CostFunction costs_from_flag(const std::string& s, const Election& e) {
  if (s == "zc") return CostFunction::zero();
  if (s == "uc") return CostFunction::unit();
  return parse_cost_function(read_text_file(s), e);
}

Cost budget_from_flag(const std::string& s) {
  if (s == "inf") return kInfiniteCost;
  long long b = detail::parse_count(0, s, "budget");
  return b;
}

json vector_json(const Election& e, const CloningVector& v) {
  json out = json::object();
  for (int c = 0; c < e.num_candidates(); ++c)
    if (v[c] > 1) out[e.label(c)] = v[c];
  return out;
}

std::string vector_text(const Election& e, const CloningVector& v) {
  std::string out;
  for (int c = 0; c < e.num_candidates(); ++c) {
    if (v[c] <= 1) continue;
    if (!out.empty()) out += ", ";
    out += e.label(c) + "=" + std::to_string(v[c]);
  }
  return out.empty() ? "(no clones)" : out;
}

json strategy_json(const Election& e, const Strategy& st) {
  json out;
  out["label"] = st.label;
  out["vector"] = vector_json(e, st.vector);
  out["extra_clones"] = extra_clones(st.vector);
  out["certifies"] = st.certifies.str();
  out["certificate"] = certificate_kind(st.certificate);
  if (auto* sampled = std::get_if<SampledEvidenceCert>(&st.certificate)) {
    out["samples"] = sampled->samples;
    out["successes"] = sampled->successes;
    out["seed"] = sampled->seed;
  }
  return out;
}

struct CommonArgs {
  std::string file;
  std::string rule = "plurality";
  int k = 2;
  std::string preferred;
  std::string mode = "0plus";
  bool as_json = false;
};

void add_rule_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("file", args.file, "election file")->required();
  cmd->add_option("--rule", args.rule,
                  "plurality, veto, borda, kapproval, runoff, maximin, copeland")
      ->required();
  cmd->add_option("--k", args.k, "approval window for kapproval (default 2)");
  cmd->add_flag("--json", args.as_json, "emit JSON");
}

int run_score(const CommonArgs& args) {
  Election e = parse_election(read_text_file(args.file));
  Rule r = rule_from_flags(args.rule, args.k);
  auto sc = scores(e, r);
  if (args.as_json) {
    json out;
    out["rule"] = r.name();
    json table = json::object();
    for (int c = 0; c < e.num_candidates(); ++c) table[e.label(c)] = sc[c];
    out["scores"] = table;
    std::cout << out.dump(2) << "\n";
  } else {
    for (int c = 0; c < e.num_candidates(); ++c)
      std::cout << e.label(c) << ": " << sc[c] << "\n";
  }
  return 0;
}

int run_winners(const CommonArgs& args) {
  Election e = parse_election(read_text_file(args.file));
  Rule r = rule_from_flags(args.rule, args.k);
  auto win = winners(e, r);
  if (args.as_json) {
    json out;
    out["rule"] = r.name();
    json list = json::array();
    for (int c : win) list.push_back(e.label(c));
    out["winners"] = list;
    std::cout << out.dump(2) << "\n";
  } else {
    for (int c : win) std::cout << e.label(c) << "\n";
  }
  return 0;
}

int report_exit(const AnalysisReport& rep) {
  return rep.verdict == Verdict::Inconclusive ? 1 : 0;
}

int run_analyze(const CommonArgs& args, const CopelandSearch& search) {
  Election e = parse_election(read_text_file(args.file));
  Rule r = rule_from_flags(args.rule, args.k);
  int c = candidate_index(e, args.preferred);
  SuccessMode mode = mode_from_flag(args.mode);
  auto rep = analyze(e, r, c, mode, search);
  if (args.as_json) {
    json out;
    out["rule"] = r.name();
    out["preferred"] = e.label(c);
    out["mode"] = mode.str();
    out["verdict"] = verdict_name(rep.verdict);
    out["condition"] = rep.condition;
    json derived = json::object();
    for (const auto& [key, val] : rep.derived) derived[key] = val.str();
    out["derived"] = derived;
    json strategies = json::array();
    for (const auto& st : rep.strategies) strategies.push_back(strategy_json(e, st));
    out["strategies"] = strategies;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
    std::cout << "condition: " << rep.condition << "\n";
    for (const auto& [key, val] : rep.derived)
      std::cout << "derived " << key << " = " << val.str() << "\n";
    for (const auto& st : rep.strategies)
      std::cout << "strategy " << st.label << ": " << vector_text(e, st.vector)
                << " (certifies " << st.certifies.str() << ", certificate "
                << certificate_kind(st.certificate) << ")\n";
  }
  return report_exit(rep);
}

int run_solve(const CommonArgs& args, const std::string& costs_flag,
              const std::string& budget_flag, const SearchCaps& caps,
              const CopelandSearch& search) {
  Election e = parse_election(read_text_file(args.file));
  Rule r = rule_from_flags(args.rule, args.k);
  int c = candidate_index(e, args.preferred);
  SuccessMode mode = mode_from_flag(args.mode);
  CostFunction costs = costs_from_flag(costs_flag, e);
  Cost budget = budget_from_flag(budget_flag);
  auto d = decide_q_cloning(e, r, c, mode, costs, budget, caps, search);
  if (args.as_json) {
    json out;
    out["outcome"] = outcome_name(d.outcome);
    out["method"] = d.method;
    out["note"] = d.note;
    if (d.outcome == DecisionResult::Outcome::Yes) {
      out["cost"] = d.cost;
      out["optimal"] = d.optimal;
      out["strategy"] = strategy_json(e, *d.strategy);
    }
    if (d.outcome == DecisionResult::Outcome::No)
      out["within_caps_only"] = d.within_caps_only;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "outcome: " << outcome_name(d.outcome) << "\n";
    if (d.outcome == DecisionResult::Outcome::Yes) {
      std::cout << "cost: " << d.cost << (d.optimal ? " (optimal)" : "") << "\n";
      std::cout << "strategy " << d.strategy->label << ": "
                << vector_text(e, d.strategy->vector) << "\n";
    }
    if (d.outcome == DecisionResult::Outcome::No && d.within_caps_only)
      std::cout << "scope: verified within search caps only\n";
    std::cout << "note: " << d.note << "\n";
  }
  return d.outcome == DecisionResult::Outcome::Inconclusive ? 1 : 0;
}

int run_verify(const CommonArgs& args, const std::string& vector_flag,
               std::uint64_t max_assignments) {
  Election e = parse_election(read_text_file(args.file));
  Rule r = rule_from_flags(args.rule, args.k);
  int c = candidate_index(e, args.preferred);
  SuccessMode mode = mode_from_flag(args.mode);
  CloningVector v = vector_from_flag(e, vector_flag);
  auto chk = check_success_exact(e, r, c, v, mode.kind, max_assignments);
  std::string outcome = chk.outcome == ExactCheckResult::Outcome::Success
                            ? "success"
                        : chk.outcome == ExactCheckResult::Outcome::Failure
                            ? "failure"
                            : "not-applicable";
  if (args.as_json) {
    json out;
    out["outcome"] = outcome;
    out["mode"] = mode.str();
    out["vector"] = vector_json(e, v);
    out["assignments_checked"] = chk.assignments_checked;
    out["note"] = chk.note;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "outcome: " << outcome << "\n";
    std::cout << "assignments checked: " << chk.assignments_checked << "\n";
    if (!chk.note.empty()) std::cout << "note: " << chk.note << "\n";
  }
  return 0;
}

int run_estimate(const CommonArgs& args, const std::string& vector_flag,
                 std::uint64_t samples, std::uint64_t seed) {
  Election e = parse_election(read_text_file(args.file));
  Rule r = rule_from_flags(args.rule, args.k);
  int c = candidate_index(e, args.preferred);
  CloningVector v = vector_from_flag(e, vector_flag);
  auto est = estimate_success_probability(e, r, c, v, samples, seed);
  if (args.as_json) {
    json out;
    out["samples"] = est.samples;
    out["successes"] = est.successes;
    out["seed"] = est.seed;
    out["estimate"] = est.estimate.str();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << est.successes << " successes in " << est.samples
              << " samples (seed " << est.seed << "), estimate "
              << est.estimate.str() << "\n";
  }
  return 0;
}

int run_mcgarvey(const std::string& file, bool as_json) {
  MajoritySpec spec = parse_majority_spec(read_text_file(file));
  Election e = mcgarvey_realize(spec);
  if (as_json) {
    json out;
    out["voters"] = e.num_voters();
    out["election"] = serialize_election(e);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << serialize_election(e);
  }
  return 0;
}

int run_pnk(int n, int k, std::uint64_t trials, std::uint64_t seed,
            bool as_json) {
  auto res = pnk_experiment(n, k, trials, seed);
  if (as_json) {
    json out;
    out["n"] = res.n;
    out["k"] = res.k;
    out["trials"] = res.trials;
    out["successes"] = res.successes;
    out["seed"] = res.seed;
    out["estimate"] = res.estimate.str();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << res.successes << " successes in " << res.trials
              << " trials (seed " << res.seed << "), estimate "
              << res.estimate.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"election cloning analysis"};
  app.require_subcommand(1);

  CommonArgs score_args, winners_args, analyze_args, solve_args, verify_args,
      estimate_args;
  std::string solve_costs = "uc", solve_budget = "inf";
  std::string verify_vector, estimate_vector;
  SearchCaps caps;
  CopelandSearch search;
  std::uint64_t est_samples = 10000, est_seed = 1;
  std::string mcgarvey_file;
  bool mcgarvey_json = false;
  int pnk_n = 0, pnk_k = 0;
  std::uint64_t pnk_trials = 100000, pnk_seed = 1;
  bool pnk_json = false;

  auto* score_cmd = app.add_subcommand("score", "per-candidate scores");
  add_rule_flags(score_cmd, score_args);

  auto* winners_cmd = app.add_subcommand("winners", "co-winners under a rule");
  add_rule_flags(winners_cmd, winners_args);

  auto* analyze_cmd =
      app.add_subcommand("analyze", "closed-form manipulability analysis");
  add_rule_flags(analyze_cmd, analyze_args);
  analyze_cmd->add_option("--preferred", analyze_args.preferred, "candidate to promote")
      ->required();
  analyze_cmd->add_option("--mode", analyze_args.mode,
                          "0plus, 1, or a threshold in (0,1)");
  analyze_cmd->add_option("--copeland-cap", search.variable_cap,
                          "per-variable cap for the tie search (-1 = auto)");
  analyze_cmd->add_option("--copeland-nodes", search.max_nodes,
                          "node budget for the tie search");

  auto* solve_cmd = app.add_subcommand("solve", "budgeted cloning decision");
  add_rule_flags(solve_cmd, solve_args);
  solve_cmd->add_option("--preferred", solve_args.preferred, "candidate to promote")
      ->required();
  solve_cmd->add_option("--mode", solve_args.mode, "0plus, 1, or a threshold");
  solve_cmd->add_option("--costs", solve_costs, "zc, uc, or a cost table file");
  solve_cmd->add_option("--budget", solve_budget, "nonnegative integer or inf");
  solve_cmd->add_option("--caps-clones", caps.max_extra_clones,
                        "extra-clone cap for the search fallback");
  solve_cmd->add_option("--caps-assignments", caps.max_assignments,
                        "assignment cap per vector");
  solve_cmd->add_option("--copeland-cap", search.variable_cap,
                        "per-variable cap for the tie search (-1 = auto)");
  solve_cmd->add_option("--copeland-nodes", search.max_nodes,
                        "node budget for the tie search");

  auto* verify_cmd =
      app.add_subcommand("verify", "exact check of one cloning vector");
  add_rule_flags(verify_cmd, verify_args);
  verify_cmd->add_option("--preferred", verify_args.preferred, "candidate to promote")
      ->required();
  verify_cmd->add_option("--vector", verify_vector, "name=count,... (others stay 1)")
      ->required();
  verify_cmd->add_option("--mode", verify_args.mode, "0plus or 1");
  verify_cmd->add_option("--caps-assignments", caps.max_assignments,
                         "assignment cap");

  auto* estimate_cmd =
      app.add_subcommand("estimate", "sampled success probability of a vector");
  add_rule_flags(estimate_cmd, estimate_args);
  estimate_cmd
      ->add_option("--preferred", estimate_args.preferred, "candidate to promote")
      ->required();
  estimate_cmd->add_option("--vector", estimate_vector, "name=count,...")
      ->required();
  estimate_cmd->add_option("--samples", est_samples, "sample count");
  estimate_cmd->add_option("--seed", est_seed, "stream seed");

  auto* mcgarvey_cmd =
      app.add_subcommand("mcgarvey", "realize a majority spec as an election");
  mcgarvey_cmd->add_option("file", mcgarvey_file, "majority spec file")->required();
  mcgarvey_cmd->add_flag("--json", mcgarvey_json, "emit JSON");

  auto* pnk_cmd =
      app.add_subcommand("pnk", "clone-coverage probability experiment");
  pnk_cmd->add_option("--n", pnk_n, "voters")->required();
  pnk_cmd->add_option("--k", pnk_k, "clones")->required();
  pnk_cmd->add_option("--trials", pnk_trials, "trial count");
  pnk_cmd->add_option("--seed", pnk_seed, "stream seed");
  pnk_cmd->add_flag("--json", pnk_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*score_cmd) return run_score(score_args);
    if (*winners_cmd) return run_winners(winners_args);
    if (*analyze_cmd) return run_analyze(analyze_args, search);
    if (*solve_cmd)
      return run_solve(solve_args, solve_costs, solve_budget, caps, search);
    if (*verify_cmd)
      return run_verify(verify_args, verify_vector, caps.max_assignments);
    if (*estimate_cmd)
      return run_estimate(estimate_args, estimate_vector, est_samples, est_seed);
    if (*mcgarvey_cmd) return run_mcgarvey(mcgarvey_file, mcgarvey_json);
    if (*pnk_cmd) return run_pnk(pnk_n, pnk_k, pnk_trials, pnk_seed, pnk_json);
  } catch (const SearchSpaceTooLarge& ex) {
    std::cerr << "search space too large: " << ex.what() << "\n";
    return 1;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
