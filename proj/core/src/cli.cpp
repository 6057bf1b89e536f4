#include "votematch/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "votematch/approval_control.hpp"
#include "votematch/caps.hpp"
#include "votematch/cover_audit.hpp"
#include "votematch/generate.hpp"
#include "votematch/io.hpp"
#include "votematch/oracles.hpp"
#include "votematch/veto_bribery.hpp"

namespace votematch::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

const char* yes_no(bool yes) { return yes ? "yes" : "no"; }

AttackDecision run_solver(const ProblemFile& file) {
  if (file.kind == ProblemKind::kCcrv) {
    return solve_ccrv_2approval(to_ccrv_instance(file));
  }
  if (file.kind == ProblemKind::kPricedCcrv) {
    return solve_priced_ccrv_2approval(to_ccrv_instance(file));
  }
  BriberyInstance instance = to_bribery_instance(file);
  if (instance.rule == Rule{RuleKind::kApproval, 2}) return solve_bribery_2approval(instance);
  if (instance.rule == Rule{RuleKind::kVeto, 2}) return solve_bribery_2veto(instance);
  if (instance.rule == Rule{RuleKind::kVeto, 3}) return solve_bribery_3veto_exact(instance);
  throw std::invalid_argument("no solver for this rule");
}

AttackDecision run_oracle(const ProblemFile& file) {
  if (file.kind == ProblemKind::kBribery) return brute_bribery(to_bribery_instance(file));
  return brute_ccrv(to_ccrv_instance(file));
}

void print_decision(std::ostream& out, const AttackDecision& decision) {
  out << "decision " << yes_no(decision.yes) << '\n';
  if (decision.yes) out << "objective " << decision.objective << '\n';
}

// Voters are addressed positionally: v1..vn in the registered list, w1..wm in
// the unregistered one.
void print_witness(std::ostream& out, const AttackDecision& decision) {
  if (!decision.yes) return;
  if (decision.replacement) {
    const ReplacementPlan& plan = *decision.replacement;
    for (size_t i = 0; i < plan.removed.size(); ++i) {
      out << "replace v" << plan.removed[i] + 1 << " with w" << plan.added[i] + 1 << '\n';
    }
  }
  if (decision.bribery) {
    const BriberyPlan& plan = *decision.bribery;
    for (size_t i = 0; i < plan.bribed.size(); ++i) {
      const Vote& vote = plan.new_votes[i];
      out << "bribe v" << plan.bribed[i] + 1 << " to "
          << (vote.kind() == VoteKind::kApprove ? "approve" : "veto");
      for (const CandidateId& c : vote.chosen()) out << ' ' << c.name();
      out << '\n';
    }
  }
}

// Re-verifies a witness with election primitives only: apply the plan and
// re-score. No matching code runs on this path.
bool check_witness(const ProblemFile& file, const AttackDecision& decision) {
  if (!decision.yes) return false;
  if (file.kind != ProblemKind::kBribery) {
    if (!decision.replacement) return false;
    CcrvInstance instance = to_ccrv_instance(file);
    Election after = apply_replacement(instance, *decision.replacement);
    return is_winner(after, instance.preferred);
  }
  if (!decision.bribery) return false;
  BriberyInstance instance = to_bribery_instance(file);
  Election after = apply_bribery(to_election(instance), *decision.bribery);
  return is_winner(after, instance.preferred);
}

Rule parse_rule_name(const std::string& name) {
  if (name == "2approval") return Rule{RuleKind::kApproval, 2};
  if (name == "2veto") return Rule{RuleKind::kVeto, 2};
  if (name == "3veto") return Rule{RuleKind::kVeto, 3};
  throw std::invalid_argument("unknown rule '" + name + "'");
}

ProblemKind parse_kind_name(const std::string& name) {
  if (name == "ccrv") return ProblemKind::kCcrv;
  if (name == "priced-ccrv") return ProblemKind::kPricedCcrv;
  if (name == "bribery") return ProblemKind::kBribery;
  throw std::invalid_argument("unknown problem kind '" + name + "'");
}

int do_audit(std::ostream& out) {
  BtCounterexample cx = build_bt_counterexample();
  auto verdict = verify_b_edge_cover(cx.problem, cx.published_cover);
  const bool cover_ok = std::holds_alternative<Weight>(verdict);
  Weight cover_weight = 0;
  if (cover_ok) {
    cover_weight = std::get<Weight>(verdict);
    out << "cover weight " << cover_weight << '\n';
  } else {
    out << "cover invalid: " << std::get<CoverViolation>(verdict).describe() << '\n';
  }
  out << "threshold " << cx.threshold << '\n';
  std::optional<BEdgeCover> best = min_weight_b_edge_cover(cx.problem);
  if (best) {
    out << "min cover weight " << best->total_weight << '\n';
  } else {
    out << "min cover infeasible\n";
  }
  const bool nmts_yes = solve_nmts_brute(cx.nmts);
  out << "nmts " << yes_no(nmts_yes) << '\n';
  const bool refuted = cover_ok && cover_weight <= cx.threshold && best &&
                       best->total_weight <= cx.threshold && !nmts_yes;
  out << "refuted " << yes_no(refuted) << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"election control and bribery solvers built on weighted perfect b-matching",
               "votematch"};
  app.require_subcommand(1);

  std::string solve_file;
  bool want_witness = false;
  bool want_check = false;
  CLI::App* solve_cmd = app.add_subcommand("solve", "decide an election problem file");
  solve_cmd->add_option("file", solve_file, "election problem file")->required();
  solve_cmd->add_flag("--witness", want_witness, "print the plan behind a yes");
  solve_cmd->add_flag("--check", want_check, "re-verify the witness by re-scoring");

  std::string oracle_file;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "decide a small instance with the brute-force reference");
  oracle_cmd->add_option("file", oracle_file, "election problem file")->required();

  std::string match_file;
  std::string sense_name = "max";
  long long threshold = 0;
  CLI::App* match_cmd = app.add_subcommand("match", "solve a perfect b-matching problem file");
  match_cmd->add_option("file", match_file, "graph file")->required();
  match_cmd->add_option("--sense", sense_name, "optimization sense")
      ->check(CLI::IsMember({"max", "min"}));
  CLI::Option* threshold_opt = match_cmd->add_option(
      "--threshold", threshold, "decide whether the optimum meets this weight");

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->require_subcommand(1);
  int rx3c_k = 2;
  unsigned long long rx3c_seed = 0;
  CLI::App* gen_rx3c_cmd = gen_cmd->add_subcommand("rx3c", "random restricted exact-cover instance");
  gen_rx3c_cmd->add_option("--k", rx3c_k, "number of cover sets asked for")->required();
  gen_rx3c_cmd->add_option("--seed", rx3c_seed, "random seed");

  GenElectionOptions gen_options;
  std::string gen_rule = "2approval";
  std::string gen_kind = "ccrv";
  CLI::App* gen_election_cmd =
      gen_cmd->add_subcommand("election", "random election problem instance");
  gen_election_cmd->add_option("--seed", gen_options.seed, "random seed");
  gen_election_cmd->add_option("--candidates", gen_options.candidates, "number of candidates");
  gen_election_cmd->add_option("--voters", gen_options.voters, "number of registered voters");
  gen_election_cmd->add_option("--unregistered", gen_options.unregistered,
                               "number of unregistered voters (control kinds)");
  gen_election_cmd->add_option("--rule", gen_rule, "2approval, 2veto or 3veto");
  gen_election_cmd->add_option("--problem", gen_kind, "ccrv, priced-ccrv or bribery");
  gen_election_cmd->add_option("--max-price", gen_options.max_price,
                               "prices are drawn from 0..max-price");
  gen_election_cmd->add_option("--limit", gen_options.limit,
                               "replacement limit or budget; -1 draws one");
  gen_election_cmd->add_option("--max-budget", gen_options.max_budget,
                               "upper bound for drawn budgets");

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "run a hardness reduction");
  reduce_cmd->require_subcommand(1);
  std::string reduce_file;
  CLI::App* reduce_rx3c_cmd =
      reduce_cmd->add_subcommand("rx3c", "restricted exact cover to 3-veto bribery");
  reduce_rx3c_cmd->add_option("file", reduce_file, "rx3c instance file")->required();

  CLI::App* audit_cmd = app.add_subcommand(
      "audit-counterexample", "re-check the edge-cover reduction counterexample from scratch");

  std::string compare_file;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "run solver and reference on one file and compare");
  compare_cmd->add_option("file", compare_file, "election problem file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (app.got_subcommand(solve_cmd)) {
      ProblemFile file = parse_problem(read_file(solve_file));
      AttackDecision decision = run_solver(file);
      print_decision(out, decision);
      if (want_witness) print_witness(out, decision);
      if (want_check && decision.yes) {
        out << "check winner " << yes_no(check_witness(file, decision)) << '\n';
      }
      return 0;
    }
    if (app.got_subcommand(oracle_cmd)) {
      ProblemFile file = parse_problem(read_file(oracle_file));
      print_decision(out, run_oracle(file));
      return 0;
    }
    if (app.got_subcommand(match_cmd)) {
      PerfectBMatchingProblem problem = read_graph(read_file(match_file));
      problem.sense = sense_name == "min" ? Sense::kMinimize : Sense::kMaximize;
      SolveOutcome outcome = solve(problem);
      if (outcome.feasible()) {
        const Weight weight = outcome.solution->total_weight;
        out << "objective " << weight << '\n';
        if (threshold_opt->count() > 0) {
          const bool yes = problem.sense == Sense::kMaximize ? weight >= threshold
                                                             : weight <= threshold;
          out << "decision " << yes_no(yes) << '\n';
        }
      } else {
        out << "infeasible " << outcome.infeasible_reason << '\n';
        if (threshold_opt->count() > 0) out << "decision no\n";
      }
      return 0;
    }
    if (app.got_subcommand(gen_cmd)) {
      if (gen_cmd->got_subcommand(gen_rx3c_cmd)) {
        out << write_rx3c(gen_rx3c(rx3c_k, rx3c_seed));
        return 0;
      }
      gen_options.rule = parse_rule_name(gen_rule);
      gen_options.kind = parse_kind_name(gen_kind);
      out << write_problem(gen_election(gen_options));
      return 0;
    }
    if (app.got_subcommand(reduce_cmd)) {
      Rx3cInstance instance = read_rx3c(read_file(reduce_file));
      BriberyInstance reduced = reduce_rx3c_to_3veto(instance);
      out << write_problem(to_problem_file("reduced-rx3c", reduced));
      return 0;
    }
    if (app.got_subcommand(audit_cmd)) {
      return do_audit(out);
    }
    if (app.got_subcommand(compare_cmd)) {
      ProblemFile file = parse_problem(read_file(compare_file));
      AttackDecision solver = run_solver(file);
      AttackDecision oracle = run_oracle(file);
      out << "solver decision " << yes_no(solver.yes) << '\n';
      out << "oracle decision " << yes_no(oracle.yes) << '\n';
      const bool agree = solver.yes == oracle.yes;
      out << "agreement " << yes_no(agree) << '\n';
      return agree ? 0 : 3;
    }
    err << "error: no command selected\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    err << "weight cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 70;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace votematch::cli
