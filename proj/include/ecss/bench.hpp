#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ecss/graph.hpp"
#include "ecss/local_search.hpp"
#include "ecss/rational.hpp"
#include "ecss/report.hpp"

namespace ecss {

/// Edge count up to which `--oracle auto` runs the exact solver.
inline constexpr int kAutoOracleMaxEdges = 22;

/// Runs exact_min seeded with the report's solution and attaches the
/// optimum. Returns the oracle status; budget overruns are reported, not
/// thrown. With `force == false` the oracle only runs when m is at most
/// kAutoOracleMaxEdges or the solution already meets the |F| >= n bound
/// (then the search stops at the root).
OracleStatus run_oracle(const Graph& g, SolveReport& report, bool force,
                        std::uint64_t node_budget = 10'000'000);

struct BenchRow {
  std::string instance;
  Mode mode = Mode::kTwoEdge;
  int n = 0;
  int m = 0;
  std::size_t cost = 0;
  std::optional<std::size_t> opt;
  std::optional<Rational> ratio;
  OracleStatus oracle = OracleStatus::kSkipped;
  bool feasible = false;
  std::size_t improvements = 0;
  double runtime_ms = 0.0;
};

struct BenchResult {
  std::string suite;
  std::vector<BenchRow> rows;
  std::optional<Rational> max_ratio;
  std::optional<Rational> mean_ratio;
  std::size_t flagged = 0;  // rows whose oracle ran out of budget
  bool within_bound = true;  // every known ratio satisfies 3 * cost <= 4 * opt
};

/// Named suites: "small" (300 seeded random instances, n in [5, 10],
/// m <= 20), "tight" (tight family k = 1..4), "scaling" (cycles up to
/// n = 1000 and random instances with n = 1000, m = 3000). Every instance is
/// solved in both modes. Throws std::invalid_argument for unknown names.
BenchResult run_bench(const std::string& suite, std::uint64_t seed);

nlohmann::ordered_json bench_json(const BenchResult& result, bool include_timing);
std::string bench_table(const BenchResult& result);

/// 3 * cost <= 4 * opt, in integers.
inline bool within_four_thirds(std::size_t cost, std::size_t opt) { return 3 * cost <= 4 * opt; }

}  // namespace ecss
