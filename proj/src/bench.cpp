#include "ecss/bench.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "ecss/connectivity.hpp"
#include "ecss/instances.hpp"
#include "ecss/oracle.hpp"

namespace ecss {

OracleStatus run_oracle(const Graph& g, SolveReport& report, bool force, std::uint64_t node_budget) {
  const bool cheap = g.num_edges() <= kAutoOracleMaxEdges || report.cost == degree_lower_bound(g);
  if (!force && !cheap) return OracleStatus::kSkipped;
  try {
    ExactOptions options;
    options.node_budget = node_budget;
    options.incumbent = report.solution;
    const ExactResult exact = exact_min(g, report.mode, options);
    attach_oracle(report, exact.opt);
    return OracleStatus::kSolved;
  } catch (const BudgetExceeded&) {
    return OracleStatus::kBudgetExceeded;
  }
}

namespace {

struct NamedGraph {
  std::string name;
  Graph graph;
};

std::vector<NamedGraph> suite_instances(const std::string& suite, std::uint64_t seed) {
  std::vector<NamedGraph> out;
  if (suite == "small") {
    for (SmallInstance& inst : small_suite(seed, 300)) out.push_back({inst.name, std::move(inst.graph)});
  } else if (suite == "tight") {
    for (int k = 1; k <= 4; ++k) out.push_back({"tight-k" + std::to_string(k), gen_tight(k)});
  } else if (suite == "scaling") {
    for (int n : {10, 100, 1000}) out.push_back({"cycle-" + std::to_string(n), gen_cycle(n)});
    for (int n : {100, 1000}) {
      out.push_back({"random-" + std::to_string(n) + "-" + std::to_string(3 * n),
                     gen_random_2connected(n, 2 * n, seed + static_cast<std::uint64_t>(n))});
    }
  } else {
    throw std::invalid_argument("unknown bench suite '" + suite + "'");
  }
  return out;
}

}  // namespace

BenchResult run_bench(const std::string& suite, std::uint64_t seed) {
  BenchResult result;
  result.suite = suite;
  Rational ratio_sum(0);
  std::size_t ratio_count = 0;
  for (const NamedGraph& inst : suite_instances(suite, seed)) {
    for (Mode mode : {Mode::kTwoEdge, Mode::kTwoVertex}) {
      SolveReport report = solve(inst.graph, mode);
      BenchRow row;
      row.instance = inst.name;
      row.mode = mode;
      row.n = inst.graph.num_vertices();
      row.m = inst.graph.num_edges();
      row.cost = report.cost;
      row.feasible = is_feasible(inst.graph, report.solution, mode);
      row.improvements = report.improvement_count;
      row.runtime_ms = report.runtime_ms;
      row.oracle = run_oracle(inst.graph, report, false);
      if (row.oracle == OracleStatus::kBudgetExceeded) ++result.flagged;
      if (report.oracle_opt) {
        row.opt = report.oracle_opt;
        row.ratio = report.ratio_vs_oracle;
        if (!result.max_ratio || *row.ratio > *result.max_ratio) result.max_ratio = row.ratio;
        ratio_sum += *row.ratio;
        ++ratio_count;
        if (!within_four_thirds(row.cost, *row.opt)) result.within_bound = false;
      }
      if (!row.feasible) result.within_bound = false;
      result.rows.push_back(std::move(row));
    }
  }
  if (ratio_count > 0) result.mean_ratio = ratio_sum / static_cast<std::int64_t>(ratio_count);
  return result;
}

nlohmann::ordered_json bench_json(const BenchResult& result, bool include_timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["suite"] = result.suite;
  auto rows = nlohmann::ordered_json::array();
  for (const BenchRow& r : result.rows) {
    nlohmann::ordered_json row;
    row["instance"] = r.instance;
    row["mode"] = to_string(r.mode);
    row["n"] = r.n;
    row["m"] = r.m;
    row["cost"] = r.cost;
    row["opt"] = r.opt ? nlohmann::ordered_json(*r.opt) : nullptr;
    row["ratio"] = r.ratio ? nlohmann::ordered_json(to_string(*r.ratio)) : nullptr;
    row["oracle_status"] = to_string(r.oracle);
    row["feasible"] = r.feasible;
    row["improvements"] = r.improvements;
    if (include_timing) row["runtime_ms"] = r.runtime_ms;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["max_ratio"] = result.max_ratio ? nlohmann::ordered_json(to_string(*result.max_ratio)) : nullptr;
  j["mean_ratio"] = result.mean_ratio ? nlohmann::ordered_json(to_string(*result.mean_ratio)) : nullptr;
  j["flagged"] = result.flagged;
  j["within_bound"] = result.within_bound;
  return j;
}

std::string bench_table(const BenchResult& result) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-6s %6s %6s %6s %6s %-8s %10s\n", "instance", "mode", "n", "m", "cost",
                "opt", "ratio", "time_ms");
  out << line;
  for (const BenchRow& r : result.rows) {
    const std::string opt = r.opt ? std::to_string(*r.opt) : (r.oracle == OracleStatus::kBudgetExceeded ? "budget" : "-");
    const std::string ratio = r.ratio ? to_string(*r.ratio) : "-";
    std::snprintf(line, sizeof line, "%-16s %-6s %6d %6d %6zu %6s %-8s %10.2f\n", r.instance.c_str(),
                  to_string(r.mode).c_str(), r.n, r.m, r.cost, opt.c_str(), ratio.c_str(), r.runtime_ms);
    out << line;
  }
  out << "rows " << result.rows.size() << ", flagged " << result.flagged;
  if (result.max_ratio) {
    out << ", max ratio " << to_string(*result.max_ratio) << " (" << boost::rational_cast<double>(*result.max_ratio)
        << "), mean ratio " << to_string(*result.mean_ratio) << " ("
        << boost::rational_cast<double>(*result.mean_ratio) << ")";
  }
  out << ", " << (result.within_bound ? "all within 4/3" : "RATIO BOUND VIOLATED") << '\n';
  return out.str();
}

}  // namespace ecss
