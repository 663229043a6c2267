// ecss: command-line driver for the 2-ECSS / 2-VCSS local search.
//
// Exit codes: 0 success, 1 check failed (verify/bench), 2 parse or usage
// error, 3 input infeasible for the mode, 4 internal invariant violation,
// 5 oracle budget exceeded under --oracle force.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ecss/bench.hpp"
#include "ecss/connectivity.hpp"
#include "ecss/instances.hpp"
#include "ecss/local_search.hpp"
#include "ecss/oracle.hpp"
#include "ecss/report.hpp"

namespace {

using namespace ecss;

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kInfeasible = 3,
  kInternal = 4,
  kOracleBudget = 5,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return parse_edge_list(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Mode mode_from(const std::string& text) {
  const auto mode = parse_mode(text);
  if (!mode) throw UsageError("unknown mode '" + text + "'");
  return *mode;
}

/// Maps the edges of a solution file onto edge ids of the instance.
EdgeSet solution_edges(const Graph& g, const Graph& solution) {
  if (solution.num_vertices() != g.num_vertices()) {
    throw UsageError("solution has a different vertex count than the instance");
  }
  EdgeSet f = EdgeSet::none(g);
  for (const Edge& e : solution.edges()) {
    const auto id = g.find_edge(e.u, e.v);
    if (!id) throw UsageError("solution edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " is not in the instance");
    f.insert(*id);
  }
  return f;
}

Graph solution_graph(const Graph& g, const EdgeSet& f) {
  std::vector<Edge> edges;
  f.for_each([&](EdgeId e) { edges.push_back(g.edge(e)); });
  return Graph(g.num_vertices(), std::move(edges));
}

struct SolveArgs {
  std::string mode;
  std::string input;
  std::uint64_t seed = 0;
  std::string order = "asc";
  std::string oracle = "auto";
  std::optional<int> max_depth;
  bool json = false;
  bool timing = false;
  std::string out;
};

int run_solve(const SolveArgs& args) {
  const Graph g = read_graph(args.input);
  const Mode mode = mode_from(args.mode);
  SolveOptions options;
  options.seed = args.seed;
  options.order = args.order == "shuffled" ? DeletionOrder::Kind::kShuffled : DeletionOrder::Kind::kAscending;
  options.max_depth = args.max_depth;
  SolveReport report = solve(g, mode, options);

  OracleStatus oracle = OracleStatus::kOff;
  if (args.oracle != "off") oracle = run_oracle(g, report, args.oracle == "force");
  if (oracle == OracleStatus::kBudgetExceeded) {
    std::cerr << "warning: oracle node budget exceeded; no optimum reported\n";
  }

  if (args.json) {
    std::cout << report_json(g, report, oracle, args.timing).dump(2) << '\n';
  } else {
    std::cout << summary_text(g, report, oracle);
  }
  if (!args.out.empty()) write_text(args.out, serialize_edge_list(solution_graph(g, report.solution)));
  if (oracle == OracleStatus::kBudgetExceeded && args.oracle == "force") return kOracleBudget;
  return kOk;
}

struct GenArgs {
  std::string family;
  int n = 0;
  int extra = 0;
  std::uint64_t seed = 0;
  int k = 1;
  int a = 1;
  int b = 2;
  int c = 2;
  std::string out;
};

int run_gen(const GenArgs& args) {
  Graph g;
  try {
    if (args.family == "tight") {
      g = gen_tight(args.k);
    } else if (args.family == "random") {
      g = gen_random_2connected(args.n, args.extra, args.seed);
    } else if (args.family == "cycle") {
      g = gen_cycle(args.n);
    } else if (args.family == "complete") {
      g = gen_complete(args.n);
    } else if (args.family == "theta") {
      g = gen_theta(args.a, args.b, args.c);
    } else {
      throw UsageError("unknown family '" + args.family + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_text(args.out, serialize_edge_list(g));
  return kOk;
}

struct VerifyArgs {
  std::string input;
  std::string solution;
  std::string mode;
  std::string dual;
  bool json = false;
};

int run_verify(const VerifyArgs& args) {
  const Graph g = read_graph(args.input);
  const Mode mode = mode_from(args.mode);
  const EdgeSet f = solution_edges(g, read_graph(args.solution));
  const bool feasible = is_feasible(g, f, mode);
  const bool minimal = feasible && is_inclusion_minimal(g, f, mode);

  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["mode"] = to_string(mode);
  j["cost"] = f.size();
  j["feasible"] = feasible;
  j["minimal"] = minimal;
  bool ok = feasible;
  if (!args.dual.empty()) {
    std::ifstream in(args.dual);
    if (!in) throw UsageError("cannot open '" + args.dual + "'");
    DualCertificate cert;
    try {
      cert = parse_certificate(g, in);
    } catch (const CertificateError& e) {
      throw UsageError(args.dual + ": " + e.what());
    }
    const DualCheck check = verify_dual(g, cert);
    // Integral optimum >= LP optimum >= dual objective.
    const Rational obj = check.objective;
    std::int64_t bound = obj.numerator() / obj.denominator();
    if (obj > Rational(bound)) ++bound;
    j["dual_feasible"] = check.feasible;
    j["dual_objective"] = to_string(obj);
    j["dual_lower_bound"] = check.feasible ? nlohmann::ordered_json(bound) : nullptr;
    j["dual_violated_edges"] = check.violated;
    ok = ok && check.feasible;
  }
  if (args.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "feasible  " << (feasible ? "yes" : "no") << '\n'
              << "minimal   " << (minimal ? "yes" : "no") << '\n'
              << "cost      " << f.size() << '\n';
    if (j.contains("dual_feasible")) {
      std::cout << "dual      " << (j["dual_feasible"].get<bool>() ? "feasible" : "infeasible") << ", objective "
                << j["dual_objective"].get<std::string>();
      if (!j["dual_lower_bound"].is_null()) std::cout << ", implies opt >= " << j["dual_lower_bound"].get<std::int64_t>();
      std::cout << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

struct BenchArgs {
  std::string suite;
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = false;
};

int run_bench_cmd(const BenchArgs& args) {
  BenchResult result;
  try {
    result = run_bench(args.suite, args.seed);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (args.json) {
    std::cout << bench_json(result, args.timing).dump(2) << '\n';
  } else {
    std::cout << bench_table(result);
  }
  return result.within_bound ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximate minimum 2-edge-connected and 2-vertex-connected spanning subgraphs"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Run the local search on an edge-list instance");
  solve_cmd->add_option("--mode", solve_args.mode, "2ecss or 2vcss")->required()->check(CLI::IsMember({"2ecss", "2vcss"}));
  solve_cmd->add_option("--input", solve_args.input, "Edge-list file")->required();
  solve_cmd->add_option("--seed", solve_args.seed, "Seed for --order shuffled");
  solve_cmd->add_option("--order", solve_args.order, "Deletion order")->check(CLI::IsMember({"asc", "shuffled"}));
  solve_cmd->add_option("--oracle", solve_args.oracle, "Exact optimum: auto (m <= 22), off, force")
      ->check(CLI::IsMember({"auto", "off", "force"}));
  solve_cmd->add_option("--max-depth", solve_args.max_depth, "Cap on improvement-process recursion depth");
  solve_cmd->add_flag("--json", solve_args.json, "Print the JSON report");
  solve_cmd->add_flag("--timing", solve_args.timing, "Include wall-clock time in the JSON report");
  solve_cmd->add_option("--out", solve_args.out, "Write the solution as an edge list");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("--family", gen_args.family, "tight, random, cycle, complete or theta")
      ->required()
      ->check(CLI::IsMember({"tight", "random", "cycle", "complete", "theta"}));
  gen_cmd->add_option("--n", gen_args.n, "Vertex count (random, cycle, complete)");
  gen_cmd->add_option("--extra", gen_args.extra, "Chords on top of the Hamiltonian cycle (random)");
  gen_cmd->add_option("--seed", gen_args.seed, "Seed (random)");
  gen_cmd->add_option("--k", gen_args.k, "Family member (tight)");
  gen_cmd->add_option("--a", gen_args.a, "First path length (theta)");
  gen_cmd->add_option("--b", gen_args.b, "Second path length (theta)");
  gen_cmd->add_option("--c", gen_args.c, "Third path length (theta)");
  gen_cmd->add_option("--out", gen_args.out, "Output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution and optionally a dual certificate");
  verify_cmd->add_option("--input", verify_args.input, "Edge-list instance")->required();
  verify_cmd->add_option("--solution", verify_args.solution, "Edge-list solution")->required();
  verify_cmd->add_option("--mode", verify_args.mode, "2ecss or 2vcss")->required()->check(CLI::IsMember({"2ecss", "2vcss"}));
  verify_cmd->add_option("--dual", verify_args.dual, "Dual certificate file");
  verify_cmd->add_flag("--json", verify_args.json, "Print JSON");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", bench_args.suite, "small, tight or scaling")
      ->required()
      ->check(CLI::IsMember({"small", "tight", "scaling"}));
  bench_cmd->add_option("--seed", bench_args.seed, "Suite seed");
  bench_cmd->add_flag("--json", bench_args.json, "Print JSON");
  bench_cmd->add_flag("--timing", bench_args.timing, "Include timings in JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*gen_cmd) return run_gen(gen_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*bench_cmd) return run_bench_cmd(bench_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InfeasibleInput& e) {
    std::cerr << "error: input not feasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
