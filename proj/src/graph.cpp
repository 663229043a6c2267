#include "ecss/graph.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ecss {

std::string to_string(Mode mode) {
  return mode == Mode::kTwoEdge ? "2ecss" : "2vcss";
}

std::optional<Mode> parse_mode(const std::string& text) {
  if (text == "2ecss") return Mode::kTwoEdge;
  if (text == "2vcss") return Mode::kTwoVertex;
  return std::nullopt;
}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw GraphError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(num_vertices_));
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw GraphError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw GraphError("edge " + std::to_string(i) + " is a self-loop");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second) {
      throw GraphError("edge " + std::to_string(i) + " duplicates an earlier edge");
    }
    const auto id = static_cast<EdgeId>(i);
    adjacency_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
    adjacency_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
  }
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a < 0 || b < 0 || a >= num_vertices_ || b >= num_vertices_) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  for (const auto& inc : incident(a)) {
    if (inc.neighbor == b) return inc.edge;
  }
  return std::nullopt;
}

EdgeSet EdgeSet::all(const Graph& g) {
  EdgeSet s(static_cast<std::size_t>(g.num_edges()));
  s.bits_.assign(s.bits_.size(), true);
  s.count_ = s.bits_.size();
  return s;
}

EdgeSet EdgeSet::of(const Graph& g, std::span<const EdgeId> ids) {
  EdgeSet s = none(g);
  for (EdgeId e : ids) {
    if (e < 0 || e >= g.num_edges()) throw std::out_of_range("edge id out of range");
    s.insert(e);
  }
  return s;
}

void EdgeSet::insert(EdgeId e) {
  auto ref = bits_.at(static_cast<std::size_t>(e));
  if (!ref) {
    ref = true;
    ++count_;
  }
}

void EdgeSet::erase(EdgeId e) {
  auto ref = bits_.at(static_cast<std::size_t>(e));
  if (ref) {
    ref = false;
    --count_;
  }
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  if (other.universe() != universe()) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

EdgeSet EdgeSet::united(const EdgeSet& other) const {
  if (other.universe() != universe()) throw std::invalid_argument("edge sets over different graphs");
  EdgeSet out = *this;
  other.for_each([&](EdgeId e) { out.insert(e); });
  return out;
}

EdgeSet EdgeSet::minus(const EdgeSet& other) const {
  if (other.universe() != universe()) throw std::invalid_argument("edge sets over different graphs");
  EdgeSet out = *this;
  other.for_each([&](EdgeId e) { out.erase(e); });
  return out;
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  out.reserve(count_);
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

std::vector<int> degrees(const Graph& g, const EdgeSet& f) {
  std::vector<int> deg(static_cast<std::size_t>(g.num_vertices()), 0);
  f.for_each([&](EdgeId e) {
    const Edge& ed = g.edge(e);
    ++deg[static_cast<std::size_t>(ed.u)];
    ++deg[static_cast<std::size_t>(ed.v)];
  });
  return deg;
}

}  // namespace ecss
