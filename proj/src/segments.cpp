#include "ecss/segments.hpp"

#include <algorithm>
#include <stdexcept>

#include "ecss/connectivity.hpp"

namespace ecss {

EdgeId Segment::smallest_edge() const { return *std::min_element(edges.begin(), edges.end()); }

LengthClass length_class(int length) {
  if (length <= 1) return LengthClass::kTrivial;
  if (length <= 3) return LengthClass::kShort;
  return LengthClass::kLong;
}

Decomposition decompose(const Graph& g, const EdgeSet& f) {
  const std::vector<int> deg = degrees(g, f);
  auto degree_of = [&](VertexId v) { return deg[static_cast<std::size_t>(v)]; };
  bool any_high = false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (degree_of(v) < 2) throw std::invalid_argument("decompose: vertex with degree below 2");
    any_high = any_high || degree_of(v) >= 3;
  }

  Decomposition out;
  if (!any_high) {
    if (!is_spanning_connected(g, f)) {
      throw std::invalid_argument("decompose: degree-2 solution is not a single cycle");
    }
    out.whole_cycle = true;
    return out;
  }

  std::vector<char> used(static_cast<std::size_t>(g.num_edges()), 0);
  for (VertexId start = 0; start < g.num_vertices(); ++start) {
    if (degree_of(start) < 3) continue;
    for (const Incidence& first : g.incident(start)) {
      if (!f.contains(first.edge) || used[static_cast<std::size_t>(first.edge)]) continue;
      Segment seg;
      seg.vertices.push_back(start);
      VertexId at = first.neighbor;
      EdgeId via = first.edge;
      while (true) {
        used[static_cast<std::size_t>(via)] = 1;
        seg.edges.push_back(via);
        seg.vertices.push_back(at);
        if (degree_of(at) >= 3) break;
        EdgeId next_edge = -1;
        VertexId next_vertex = -1;
        for (const Incidence& inc : g.incident(at)) {
          if (inc.edge != via && f.contains(inc.edge)) {
            next_edge = inc.edge;
            next_vertex = inc.neighbor;
            break;
          }
        }
        via = next_edge;
        at = next_vertex;
      }
      out.segments.push_back(std::move(seg));
    }
  }
  std::sort(out.segments.begin(), out.segments.end(), [](const Segment& a, const Segment& b) {
    return a.smallest_edge() < b.smallest_edge();
  });
  return out;
}

Strength strength(const Graph& g, const EdgeSet& f, const Segment& s, Mode mode) {
  EdgeSet rest = f;
  for (EdgeId e : s.edges) rest.erase(e);
  VertexMask alive(static_cast<std::size_t>(g.num_vertices()), 1);
  for (VertexId v : s.internal()) alive[static_cast<std::size_t>(v)] = 0;
  return is_feasible(g, rest, alive, mode) ? Strength::kStrong : Strength::kWeak;
}

SegmentClass classify(const Graph& g, const EdgeSet& f, const Segment& s, Mode mode) {
  return {length_class(s.length()), strength(g, f, s, mode), s.closed()};
}

SegmentKey segment_key(const Segment& s) {
  SegmentKey key = s.vertices;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return key;
}

EdgeSet redundant_edges(const Graph& g, const EdgeSet& f) {
  if (!is_2ecss(g, f)) throw std::invalid_argument("redundant_edges: input is not a 2-ECSS");
  const std::vector<int> deg = degrees(g, f);
  EdgeSet out = EdgeSet::none(g);
  EdgeSet scratch = f;
  f.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    // Only trivial segments (both ends high-degree) qualify.
    if (deg[static_cast<std::size_t>(ed.u)] < 3 || deg[static_cast<std::size_t>(ed.v)] < 3) return;
    scratch.erase(e);
    if (is_2ecss(g, scratch)) out.insert(e);
    scratch.insert(e);
  });
  return out;
}

}  // namespace ecss
