#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecss {

using VertexId = int;
using EdgeId = int;

/// Which survivability requirement a solution must meet.
enum class Mode {
  kTwoEdge,    // 2-edge-connected spanning subgraph
  kTwoVertex,  // 2-vertex-connected spanning subgraph
};

std::string to_string(Mode mode);
std::optional<Mode> parse_mode(const std::string& text);

/// Thrown when a graph cannot be constructed (self-loop, parallel edge,
/// vertex out of range).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the input graph cannot carry a solution of the requested
/// kind (too small, not 2-connected for 2vcss, has a bridge for 2ecss).
class InfeasibleInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Immutable undirected simple graph on vertices 0..n-1 with dense, stable
/// edge ids 0..m-1. Each edge is stored with u < v. Adjacency lists are in
/// ascending edge-id order.
class Graph {
 public:
  Graph() = default;
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  bool operator==(const Graph& other) const {
    return num_vertices_ == other.num_vertices_ && edges_ == other.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// A subset of a graph's edges. Membership is O(1); iteration is in
/// ascending edge-id order. The universe is the parent graph's edge count.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : bits_(universe, false) {}

  static EdgeSet none(const Graph& g) { return EdgeSet(static_cast<std::size_t>(g.num_edges())); }
  static EdgeSet all(const Graph& g);
  static EdgeSet of(const Graph& g, std::span<const EdgeId> ids);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(EdgeId e) const {
    return e >= 0 && static_cast<std::size_t>(e) < bits_.size() && bits_[static_cast<std::size_t>(e)];
  }
  void insert(EdgeId e);
  void erase(EdgeId e);

  bool is_subset_of(const EdgeSet& other) const;
  EdgeSet united(const EdgeSet& other) const;
  EdgeSet minus(const EdgeSet& other) const;

  std::vector<EdgeId> ids() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) fn(static_cast<EdgeId>(i));
    }
  }

  bool operator==(const EdgeSet& other) const { return bits_ == other.bits_; }

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// Per-vertex degree of `f`.
std::vector<int> degrees(const Graph& g, const EdgeSet& f);

}  // namespace ecss
