#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ecss/graph.hpp"
#include "ecss/minimal_solution.hpp"
#include "ecss/rational.hpp"
#include "ecss/segments.hpp"

namespace ecss {

/// One or two non-solution edges, all incident to `pivot`, that an
/// improvement operation adds to the solution.
struct CriticalEdgeSet {
  VertexId pivot = -1;
  std::vector<EdgeId> edges;
};

/// Candidate critical edge sets at u: every singleton from N(u) (edges at u
/// outside F) in ascending id, then every pair in lexicographic order.
std::vector<CriticalEdgeSet> critical_edge_sets(const Graph& g, const EdgeSet& f, VertexId u);

/// (segment key, internal vertex) pairs on which an improvement process has
/// already been started during one solve run.
using MemoKey = std::pair<SegmentKey, VertexId>;
using Memo = std::set<MemoKey>;

/// Add I, reverse-delete with I scanned last, and keep the result only if
/// it is strictly smaller than F.
std::optional<EdgeSet> try_improvement(const Graph& g, const EdgeSet& f, const CriticalEdgeSet& critical,
                                       const DeletionOrder& order);

struct SearchContext {
  const DeletionOrder* order = nullptr;
  std::optional<int> max_depth;  // unbounded when empty
  Memo memo;
  std::uint64_t process_calls = 0;
  std::uint64_t deepest = 0;
};

struct ImprovementResult {
  EdgeSet solution;
  bool improved = false;
};

/// Recursive improvement process on a strong short segment `s` of F and an
/// internal vertex `u`. F itself is never modified; on failure the returned
/// solution equals F.
ImprovementResult improvement_process(const Graph& g, const EdgeSet& f, const Segment& s, VertexId u,
                                      SearchContext& ctx, int depth = 0);

/// Drops redundant trivial edges, smallest id first, until none is left.
EdgeSet cleanup_2ecss(const Graph& g, const EdgeSet& f);

/// Replaces the end edge (u, v) of every closed short segment with an edge
/// (u, w) outside the solution, smallest feasible id first. Cost is
/// unchanged. Throws std::logic_error if no replacement keeps a 2-ECSS.
EdgeSet eliminate_closed_short_segments(const Graph& g, const EdgeSet& f);

struct SolveOptions {
  DeletionOrder::Kind order = DeletionOrder::Kind::kAscending;
  std::uint64_t seed = 0;
  std::optional<int> max_depth;
};

struct ImprovementStep {
  std::size_t before = 0;
  std::size_t after = 0;
};

struct SolveReport {
  Mode mode = Mode::kTwoEdge;
  EdgeSet solution;
  std::size_t cost = 0;
  std::size_t lower_bound_n = 0;
  std::optional<std::size_t> oracle_opt;
  std::optional<Rational> ratio_vs_oracle;
  std::size_t improvement_count = 0;
  std::vector<ImprovementStep> improvements;
  std::uint64_t process_calls = 0;
  std::size_t initial_cost = 0;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
  DeletionOrder::Kind order = DeletionOrder::Kind::kAscending;
};

/// Thrown when a produced solution fails its own feasibility or
/// minimality self-check.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Minimal 2-VCSS, then improvement processes until no strong short
/// segment has an unvisited internal vertex; in 2ecss mode followed by
/// clean-up and the closed-short-segment pass. A 2ecss input that is not
/// 2-connected is solved block by block.
SolveReport solve(const Graph& g, Mode mode, const SolveOptions& options = {});

/// Attach an exact optimum to a report and compute the ratio.
void attach_oracle(SolveReport& report, std::size_t opt);

}  // namespace ecss
