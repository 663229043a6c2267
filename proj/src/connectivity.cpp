#include "ecss/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecss {
namespace {

// Iterative low-point DFS over the subgraph (live vertices, edges of f).
// Records bridges and articulation points; can stop at the first one found
// when the caller only needs a yes/no answer.
struct LowpointScan {
  int live = 0;
  int reached = 0;
  int components = 0;
  bool found_bridge = false;
  bool found_cut = false;
  std::vector<EdgeId> bridges;
  std::vector<char> is_cut;
};

enum class StopAt { kNever, kFirstBridge, kFirstCut };

struct Frame {
  VertexId v;
  EdgeId parent_edge;
  std::size_t next;
};

LowpointScan lowpoint_scan(const Graph& g, const EdgeSet& f, const VertexMask* alive,
                           StopAt stop, bool collect) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  thread_local std::vector<int> disc;
  thread_local std::vector<int> low;
  thread_local std::vector<Frame> stack;
  disc.assign(n, -1);
  low.assign(n, 0);
  stack.clear();

  LowpointScan out;
  if (collect) out.is_cut.assign(n, 0);
  auto is_live = [&](VertexId v) { return alive == nullptr || (*alive)[static_cast<std::size_t>(v)]; };
  for (std::size_t v = 0; v < n; ++v) {
    if (is_live(static_cast<VertexId>(v))) ++out.live;
  }

  int timer = 0;
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (!is_live(root) || disc[static_cast<std::size_t>(root)] >= 0) continue;
    ++out.components;
    int root_children = 0;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    ++out.reached;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const VertexId v = fr.v;
      const auto adj = g.incident(v);
      bool descended = false;
      while (fr.next < adj.size()) {
        const Incidence inc = adj[fr.next++];
        if (inc.edge == fr.parent_edge || !f.contains(inc.edge) || !is_live(inc.neighbor)) continue;
        const auto w = static_cast<std::size_t>(inc.neighbor);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          ++out.reached;
          if (v == root) ++root_children;
          stack.push_back({inc.neighbor, inc.edge, 0});
          descended = true;
          break;
        }
        low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[w]);
      }
      if (descended) continue;

      const Frame done = stack.back();
      stack.pop_back();
      if (stack.empty()) break;
      const auto child = static_cast<std::size_t>(done.v);
      const auto parent = static_cast<std::size_t>(stack.back().v);
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] > disc[parent]) {
        out.found_bridge = true;
        if (collect) out.bridges.push_back(done.parent_edge);
        if (stop == StopAt::kFirstBridge) return out;
      }
      if (stack.back().v != root && low[child] >= disc[parent]) {
        out.found_cut = true;
        if (collect) out.is_cut[parent] = 1;
        if (stop == StopAt::kFirstCut) return out;
      }
    }
    if (root_children >= 2) {
      out.found_cut = true;
      if (collect) out.is_cut[static_cast<std::size_t>(root)] = 1;
      if (stop == StopAt::kFirstCut) return out;
    }
  }
  return out;
}

bool two_edge_connected(const Graph& g, const EdgeSet& f, const VertexMask* alive) {
  const LowpointScan scan = lowpoint_scan(g, f, alive, StopAt::kFirstBridge, false);
  if (scan.live < 3) return false;
  return scan.components == 1 && scan.reached == scan.live && !scan.found_bridge;
}

bool two_vertex_connected(const Graph& g, const EdgeSet& f, const VertexMask* alive) {
  const LowpointScan scan = lowpoint_scan(g, f, alive, StopAt::kFirstCut, false);
  if (scan.live < 3) return false;
  return scan.components == 1 && scan.reached == scan.live && !scan.found_cut;
}

}  // namespace

bool is_spanning_connected(const Graph& g, const EdgeSet& f) {
  if (g.num_vertices() <= 1) return true;
  const LowpointScan scan = lowpoint_scan(g, f, nullptr, StopAt::kNever, false);
  return scan.components == 1;
}

EdgeSet find_bridges(const Graph& g, const EdgeSet& f) {
  const LowpointScan scan = lowpoint_scan(g, f, nullptr, StopAt::kNever, true);
  EdgeSet out = EdgeSet::none(g);
  for (EdgeId e : scan.bridges) out.insert(e);
  return out;
}

std::vector<VertexId> find_cut_vertices(const Graph& g, const EdgeSet& f) {
  const LowpointScan scan = lowpoint_scan(g, f, nullptr, StopAt::kNever, true);
  if (scan.components > 1) {
    throw std::invalid_argument("find_cut_vertices: subgraph is disconnected");
  }
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < scan.is_cut.size(); ++v) {
    if (scan.is_cut[v]) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

bool is_2ecss(const Graph& g, const EdgeSet& f) { return two_edge_connected(g, f, nullptr); }
bool is_2ecss(const Graph& g, const EdgeSet& f, const VertexMask& alive) {
  return two_edge_connected(g, f, &alive);
}

bool is_2vcss(const Graph& g, const EdgeSet& f) { return two_vertex_connected(g, f, nullptr); }
bool is_2vcss(const Graph& g, const EdgeSet& f, const VertexMask& alive) {
  return two_vertex_connected(g, f, &alive);
}

bool is_feasible(const Graph& g, const EdgeSet& f, Mode mode) {
  return mode == Mode::kTwoEdge ? is_2ecss(g, f) : is_2vcss(g, f);
}

bool is_feasible(const Graph& g, const EdgeSet& f, const VertexMask& alive, Mode mode) {
  return mode == Mode::kTwoEdge ? is_2ecss(g, f, alive) : is_2vcss(g, f, alive);
}

bool is_inclusion_minimal(const Graph& g, const EdgeSet& f, Mode mode) {
  if (!is_feasible(g, f, mode)) return false;
  EdgeSet scratch = f;
  for (EdgeId e : f.ids()) {
    scratch.erase(e);
    const bool still = is_feasible(g, scratch, mode);
    scratch.insert(e);
    if (still) return false;
  }
  return true;
}

std::vector<Block> blocks(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<Frame> stack;
  std::vector<Block> out;
  int timer = 0;

  auto pop_block = [&](EdgeId until) {
    Block b;
    while (true) {
      const EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      b.edges.push_back(e);
      b.vertices.push_back(g.edge(e).u);
      b.vertices.push_back(g.edge(e).v);
      if (e == until) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    out.push_back(std::move(b));
  };

  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const VertexId v = fr.v;
      const auto adj = g.incident(v);
      bool descended = false;
      while (fr.next < adj.size()) {
        const Incidence inc = adj[fr.next++];
        if (inc.edge == fr.parent_edge) continue;
        const auto w = static_cast<std::size_t>(inc.neighbor);
        if (disc[w] < 0) {
          edge_stack.push_back(inc.edge);
          disc[w] = low[w] = timer++;
          stack.push_back({inc.neighbor, inc.edge, 0});
          descended = true;
          break;
        }
        if (disc[w] < disc[static_cast<std::size_t>(v)]) {
          edge_stack.push_back(inc.edge);  // back edge to an ancestor
          low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[w]);
        }
      }
      if (descended) continue;

      const Frame done = stack.back();
      stack.pop_back();
      if (stack.empty()) break;
      const auto child = static_cast<std::size_t>(done.v);
      const auto parent = static_cast<std::size_t>(stack.back().v);
      low[parent] = std::min(low[parent], low[child]);
      if (low[child] >= disc[parent]) pop_block(done.parent_edge);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
  return out;
}

BlockGraph extract_block(const Graph& g, const Block& block) {
  BlockGraph out;
  out.vertex_of = block.vertices;
  out.edge_of = block.edges;
  std::vector<VertexId> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < block.vertices.size(); ++i) {
    local[static_cast<std::size_t>(block.vertices[i])] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  edges.reserve(block.edges.size());
  for (EdgeId e : block.edges) {
    const Edge& ed = g.edge(e);
    edges.push_back({local[static_cast<std::size_t>(ed.u)], local[static_cast<std::size_t>(ed.v)]});
  }
  out.graph = Graph(static_cast<int>(block.vertices.size()), std::move(edges));
  return out;
}

}  // namespace ecss
