#include "ecss/local_search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

#include "ecss/connectivity.hpp"

namespace ecss {
namespace {

bool memo_covers(const Memo& memo, const SegmentKey& key, const Segment& s) {
  return std::all_of(s.internal().begin(), s.internal().end(),
                     [&](VertexId v) { return memo.contains({key, v}); });
}

std::set<SegmentKey> keys_of(const Decomposition& d) {
  std::set<SegmentKey> keys;
  for (const Segment& s : d.segments) keys.insert(segment_key(s));
  return keys;
}

// In a 2-VCSS a closed segment's end vertex separates its internal vertices
// from the rest, so one can only appear when F is a single cycle.
void assert_no_closed_segment(const Decomposition& d) {
  for (const Segment& s : d.segments) {
    if (s.closed()) throw InvariantViolation("closed segment in a 2-VCSS");
  }
}

struct CoreResult {
  EdgeSet solution;
  std::vector<ImprovementStep> improvements;
  std::uint64_t process_calls = 0;
  std::size_t initial_cost = 0;
};

// Algorithm body for a 2-connected graph.
CoreResult solve_2connected(const Graph& g, Mode mode, const DeletionOrder& order,
                            std::optional<int> max_depth) {
  CoreResult out;
  EdgeSet f = minimal_2vcss(g, order);
  out.initial_cost = f.size();

  SearchContext ctx;
  ctx.order = &order;
  ctx.max_depth = max_depth;

  bool progress = true;
  while (progress) {
    progress = false;
    const Decomposition d = decompose(g, f);
    if (d.whole_cycle) break;
    assert_no_closed_segment(d);
    for (const Segment& s : d.segments) {
      if (!is_short(s)) continue;
      const SegmentKey key = segment_key(s);
      if (memo_covers(ctx.memo, key, s)) continue;
      if (strength(g, f, s, Mode::kTwoVertex) != Strength::kStrong) continue;
      std::vector<VertexId> internal(s.internal().begin(), s.internal().end());
      std::sort(internal.begin(), internal.end());
      for (VertexId u : internal) {
        if (ctx.memo.contains({key, u})) continue;
        ImprovementResult r = improvement_process(g, f, s, u, ctx);
        if (!r.improved) continue;
        if (r.solution.size() >= f.size()) throw InvariantViolation("accepted improvement did not shrink F");
        out.improvements.push_back({f.size(), r.solution.size()});
        f = std::move(r.solution);
        progress = true;
        break;
      }
      if (progress) break;
    }
  }

  if (mode == Mode::kTwoEdge) {
    f = cleanup_2ecss(g, f);
    // Swaps can expose new redundant edges and clean-up can close new short
    // segments; alternate until neither changes anything.
    for (int guard = 0;; ++guard) {
      if (guard > g.num_edges() + 1) throw InvariantViolation("clean-up did not stabilise");
      EdgeSet next = cleanup_2ecss(g, eliminate_closed_short_segments(g, f));
      if (next == f) break;
      f = std::move(next);
    }
  }
  out.solution = std::move(f);
  out.process_calls = ctx.process_calls;
  return out;
}

}  // namespace

std::vector<CriticalEdgeSet> critical_edge_sets(const Graph& g, const EdgeSet& f, VertexId u) {
  std::vector<EdgeId> outside;
  for (const Incidence& inc : g.incident(u)) {
    if (!f.contains(inc.edge)) outside.push_back(inc.edge);
  }
  std::sort(outside.begin(), outside.end());
  std::vector<CriticalEdgeSet> sets;
  for (EdgeId e : outside) sets.push_back({u, {e}});
  for (std::size_t i = 0; i < outside.size(); ++i) {
    for (std::size_t j = i + 1; j < outside.size(); ++j) sets.push_back({u, {outside[i], outside[j]}});
  }
  return sets;
}

std::optional<EdgeSet> try_improvement(const Graph& g, const EdgeSet& f, const CriticalEdgeSet& critical,
                                       const DeletionOrder& order) {
  EdgeSet with = f;
  EdgeSet added = EdgeSet::none(g);
  for (EdgeId e : critical.edges) {
    with.insert(e);
    added.insert(e);
  }
  EdgeSet reduced = deletion_pass(g, with, added, order);
  if (reduced.size() < f.size()) return reduced;
  return std::nullopt;
}

ImprovementResult improvement_process(const Graph& g, const EdgeSet& f, const Segment& s, VertexId u,
                                      SearchContext& ctx, int depth) {
  ctx.memo.insert({segment_key(s), u});
  ++ctx.process_calls;
  ctx.deepest = std::max<std::uint64_t>(ctx.deepest, static_cast<std::uint64_t>(depth));

  const std::vector<CriticalEdgeSet> sets = critical_edge_sets(g, f, u);
  for (const CriticalEdgeSet& critical : sets) {
    if (auto better = try_improvement(g, f, critical, *ctx.order)) return {std::move(*better), true};
  }
  if (ctx.max_depth && depth >= *ctx.max_depth) return {f, false};
  if (sets.empty()) return {f, false};

  const std::set<SegmentKey> existing = keys_of(decompose(g, f));
  for (const CriticalEdgeSet& critical : sets) {
    EdgeSet with = f;
    EdgeSet added = EdgeSet::none(g);
    for (EdgeId e : critical.edges) {
      with.insert(e);
      added.insert(e);
    }
    const Decomposition d = decompose(g, with);
    for (const Segment& t : d.segments) {
      if (!is_short(t)) continue;
      const SegmentKey key = segment_key(t);
      if (existing.contains(key) || memo_covers(ctx.memo, key, t)) continue;
      if (strength(g, with, t, Mode::kTwoVertex) != Strength::kStrong) continue;
      std::vector<VertexId> internal(t.internal().begin(), t.internal().end());
      std::sort(internal.begin(), internal.end());
      for (VertexId v : internal) {
        if (ctx.memo.contains({key, v})) continue;
        ImprovementResult inner = improvement_process(g, with, t, v, ctx, depth + 1);
        if (!inner.improved) continue;
        // Deletion operation on the improved F u I, old edges before I.
        EdgeSet keep = added;
        for (EdgeId e : critical.edges) {
          if (!inner.solution.contains(e)) keep.erase(e);
        }
        EdgeSet candidate = deletion_pass(g, inner.solution, keep, *ctx.order);
        if (candidate.size() < f.size()) return {std::move(candidate), true};
        // Cheaper than F u I but not than F: not an improvement here.
      }
    }
  }
  return {f, false};
}

EdgeSet cleanup_2ecss(const Graph& g, const EdgeSet& f) {
  if (!is_2ecss(g, f)) throw std::invalid_argument("cleanup_2ecss: input is not a 2-ECSS");
  // Removing edges never makes another edge removable, so one ascending
  // scan removes exactly what repeatedly taking the smallest redundant edge
  // would.
  EdgeSet out = f;
  std::vector<int> deg = degrees(g, f);
  for (EdgeId e : f.ids()) {
    const Edge& ed = g.edge(e);
    auto& du = deg[static_cast<std::size_t>(ed.u)];
    auto& dv = deg[static_cast<std::size_t>(ed.v)];
    if (du < 3 || dv < 3) continue;
    out.erase(e);
    if (is_2ecss(g, out)) {
      --du;
      --dv;
    } else {
      out.insert(e);
    }
  }
  return out;
}

EdgeSet eliminate_closed_short_segments(const Graph& g, const EdgeSet& f) {
  if (!is_2ecss(g, f)) throw std::invalid_argument("eliminate_closed_short_segments: input is not a 2-ECSS");
  EdgeSet out = f;
  for (int guard = 0;; ++guard) {
    if (guard > g.num_edges()) throw std::logic_error("closed short segment elimination did not terminate");
    const Decomposition d = decompose(g, out);
    if (d.whole_cycle) return out;
    const auto closed = std::find_if(d.segments.begin(), d.segments.end(),
                                     [](const Segment& s) { return s.closed() && is_short(s); });
    if (closed == d.segments.end()) return out;

    const Segment& s = *closed;
    const SegmentKey on_segment = segment_key(s);
    const VertexId end = s.end_a();
    // Candidate swaps: (internal u, edge u-end to drop, edge u-w to add).
    struct Swap {
      EdgeId add;
      EdgeId drop;
    };
    std::optional<Swap> best;
    for (VertexId u : s.internal()) {
      const auto drop = g.find_edge(u, end);
      if (!drop || !out.contains(*drop)) continue;
      for (const Incidence& inc : g.incident(u)) {
        if (out.contains(inc.edge)) continue;
        if (std::binary_search(on_segment.begin(), on_segment.end(), inc.neighbor)) continue;
        if (best && best->add <= inc.edge) continue;
        EdgeSet trial = out;
        trial.erase(*drop);
        trial.insert(inc.edge);
        if (is_2ecss(g, trial)) best = Swap{inc.edge, *drop};
      }
    }
    if (!best) {
      throw std::logic_error("no feasible swap for closed short segment at vertex " + std::to_string(end));
    }
    out.erase(best->drop);
    out.insert(best->add);
  }
}

SolveReport solve(const Graph& g, Mode mode, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  if (g.num_vertices() < 3) throw InfeasibleInput("graph needs at least 3 vertices");

  const auto m = static_cast<std::size_t>(g.num_edges());
  const DeletionOrder order = options.order == DeletionOrder::Kind::kShuffled
                                  ? DeletionOrder::shuffled(m, options.seed)
                                  : DeletionOrder::ascending(m);

  SolveReport report;
  report.mode = mode;
  report.seed = options.seed;
  report.order = options.order;
  report.lower_bound_n = static_cast<std::size_t>(g.num_vertices());

  const EdgeSet everything = EdgeSet::all(g);
  if (is_2vcss(g, everything)) {
    CoreResult core = solve_2connected(g, mode, order, options.max_depth);
    report.solution = std::move(core.solution);
    report.improvements = std::move(core.improvements);
    report.process_calls = core.process_calls;
    report.initial_cost = core.initial_cost;
  } else if (mode == Mode::kTwoVertex) {
    throw InfeasibleInput("input graph is not 2-connected");
  } else if (!is_2ecss(g, everything)) {
    throw InfeasibleInput("input graph is not 2-edge-connected");
  } else {
    // Bridgeless and connected: every block is 2-connected with >= 3 vertices.
    report.solution = EdgeSet::none(g);
    for (const Block& block : blocks(g)) {
      const BlockGraph local = extract_block(g, block);
      CoreResult core = solve_2connected(local.graph, mode, order.restricted(local.edge_of), options.max_depth);
      core.solution.for_each([&](EdgeId e) { report.solution.insert(local.edge_of[static_cast<std::size_t>(e)]); });
      report.improvements.insert(report.improvements.end(), core.improvements.begin(), core.improvements.end());
      report.process_calls += core.process_calls;
      report.initial_cost += core.initial_cost;
    }
  }

  report.cost = report.solution.size();
  report.improvement_count = report.improvements.size();
  if (!is_feasible(g, report.solution, mode)) {
    throw InvariantViolation("solution failed the " + to_string(mode) + " feasibility self-check");
  }
  if (!is_inclusion_minimal(g, report.solution, mode)) {
    throw InvariantViolation("solution failed the minimality self-check");
  }
  report.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

void attach_oracle(SolveReport& report, std::size_t opt) {
  report.oracle_opt = opt;
  report.ratio_vs_oracle = Rational(static_cast<std::int64_t>(report.cost), static_cast<std::int64_t>(opt));
}

}  // namespace ecss
