#pragma once

#include <span>
#include <vector>

#include "ecss/graph.hpp"

namespace ecss {

/// A maximal plain path of a solution F: every internal vertex has degree 2
/// on F and both ends are high-degree (degree >= 3). Vertices are listed
/// from end_a to end_b; for a closed segment the end vertex appears at both
/// ends of the list.
struct Segment {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  VertexId end_a() const { return vertices.front(); }
  VertexId end_b() const { return vertices.back(); }
  int length() const { return static_cast<int>(edges.size()); }
  bool closed() const { return end_a() == end_b(); }
  std::span<const VertexId> internal() const {
    return std::span<const VertexId>(vertices).subspan(1, vertices.size() - 2);
  }
  EdgeId smallest_edge() const;
};

enum class LengthClass { kTrivial, kShort, kLong };
enum class Strength { kWeak, kStrong };

struct SegmentClass {
  LengthClass length = LengthClass::kTrivial;
  Strength strength = Strength::kWeak;
  bool closed = false;
};

LengthClass length_class(int length);
inline bool is_short(const Segment& s) { return length_class(s.length()) == LengthClass::kShort; }

struct Decomposition {
  /// F has no high-degree vertex, so it is one spanning cycle and there
  /// are no segments.
  bool whole_cycle = false;
  std::vector<Segment> segments;  // ordered by smallest contained edge id
};

/// Splits a feasible F into its segments. Throws std::invalid_argument if
/// some vertex has degree below 2 on F, or if F has no high-degree vertex
/// but is not a single spanning cycle.
Decomposition decompose(const Graph& g, const EdgeSet& f);

/// Strength test: delete the segment's edges and internal vertices and ask
/// whether what is left is still feasible for `mode` on the remaining
/// vertices. Weak iff it is not.
Strength strength(const Graph& g, const EdgeSet& f, const Segment& s, Mode mode);
SegmentClass classify(const Graph& g, const EdgeSet& f, const Segment& s, Mode mode);

/// Structural identity of a segment that survives recomputation: its sorted
/// (deduplicated) vertex list.
using SegmentKey = std::vector<VertexId>;
SegmentKey segment_key(const Segment& s);

/// Trivial-segment edges e with F - e still a 2-ECSS, each judged against
/// the given F (no cascading). Throws std::invalid_argument if F is not a
/// 2-ECSS.
EdgeSet redundant_edges(const Graph& g, const EdgeSet& f);

}  // namespace ecss
