#include "ecss/report.hpp"

#include <sstream>

namespace ecss {

std::string to_string(OracleStatus status) {
  switch (status) {
    case OracleStatus::kOff: return "off";
    case OracleStatus::kSkipped: return "skipped";
    case OracleStatus::kSolved: return "solved";
    case OracleStatus::kBudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

namespace {

std::string order_name(DeletionOrder::Kind kind) {
  return kind == DeletionOrder::Kind::kShuffled ? "shuffled" : "asc";
}

}  // namespace

nlohmann::ordered_json report_json(const Graph& g, const SolveReport& report, OracleStatus oracle,
                                   bool include_timing) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["mode"] = to_string(report.mode);
  j["n"] = g.num_vertices();
  j["m"] = g.num_edges();
  j["cost"] = report.cost;
  j["lower_bound_n"] = report.lower_bound_n;
  j["initial_cost"] = report.initial_cost;
  j["oracle_status"] = to_string(oracle);
  j["oracle_opt"] = report.oracle_opt ? nlohmann::ordered_json(*report.oracle_opt) : nullptr;
  j["ratio_vs_oracle"] = report.ratio_vs_oracle ? nlohmann::ordered_json(to_string(*report.ratio_vs_oracle)) : nullptr;
  j["improvement_count"] = report.improvement_count;
  auto steps = nlohmann::ordered_json::array();
  for (const ImprovementStep& s : report.improvements) steps.push_back({s.before, s.after});
  j["improvements"] = std::move(steps);
  j["process_calls"] = report.process_calls;
  j["order"] = order_name(report.order);
  j["seed"] = report.seed;
  auto ids = nlohmann::ordered_json::array();
  auto pairs = nlohmann::ordered_json::array();
  report.solution.for_each([&](EdgeId e) {
    ids.push_back(e);
    pairs.push_back({g.edge(e).u, g.edge(e).v});
  });
  j["solution"] = std::move(ids);
  j["solution_edges"] = std::move(pairs);
  if (include_timing) j["runtime_ms"] = report.runtime_ms;
  return j;
}

std::string summary_text(const Graph& g, const SolveReport& report, OracleStatus oracle) {
  std::ostringstream out;
  out << "mode           " << to_string(report.mode) << '\n'
      << "instance       n=" << g.num_vertices() << " m=" << g.num_edges() << '\n'
      << "cost           " << report.cost << " (initial minimal solution " << report.initial_cost << ")\n"
      << "lower bound    " << report.lower_bound_n << '\n';
  out << "oracle         " << to_string(oracle);
  if (report.oracle_opt) {
    out << ", opt=" << *report.oracle_opt << ", ratio=" << to_string(*report.ratio_vs_oracle) << " ("
        << boost::rational_cast<double>(*report.ratio_vs_oracle) << ")";
  }
  out << '\n'
      << "improvements   " << report.improvement_count << " (" << report.process_calls << " process calls)\n"
      << "order          " << order_name(report.order) << ", seed " << report.seed << '\n'
      << "runtime        " << report.runtime_ms << " ms\n";
  return out.str();
}

}  // namespace ecss
