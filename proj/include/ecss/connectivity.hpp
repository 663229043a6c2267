#pragma once

#include <vector>

#include "ecss/graph.hpp"

namespace ecss {

/// Per-vertex liveness flag. Dead vertices and every edge touching them are
/// ignored by the mask-taking overloads below; the feasibility predicates
/// then ask about the subgraph spanning the live vertices only.
using VertexMask = std::vector<char>;

bool is_spanning_connected(const Graph& g, const EdgeSet& f);

/// Edges of `f` whose removal increases the number of connected components
/// of (V, f). Works on disconnected `f`.
EdgeSet find_bridges(const Graph& g, const EdgeSet& f);

/// Articulation vertices of (V, f), ascending. Throws std::invalid_argument
/// when (V, f) is disconnected.
std::vector<VertexId> find_cut_vertices(const Graph& g, const EdgeSet& f);

/// Spanning, connected, bridgeless, and at least 3 vertices.
bool is_2ecss(const Graph& g, const EdgeSet& f);
bool is_2ecss(const Graph& g, const EdgeSet& f, const VertexMask& alive);

/// Spanning, connected, no cut vertex, and at least 3 vertices.
bool is_2vcss(const Graph& g, const EdgeSet& f);
bool is_2vcss(const Graph& g, const EdgeSet& f, const VertexMask& alive);

bool is_feasible(const Graph& g, const EdgeSet& f, Mode mode);
bool is_feasible(const Graph& g, const EdgeSet& f, const VertexMask& alive, Mode mode);

/// True when `f` is feasible for `mode` and dropping any single edge breaks it.
bool is_inclusion_minimal(const Graph& g, const EdgeSet& f, Mode mode);

/// Maximal 2-connected subgraph (or a bridge with its two endpoints).
struct Block {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending
};

/// Block decomposition of the whole graph, ordered by smallest edge id.
/// Isolated vertices belong to no block.
std::vector<Block> blocks(const Graph& g);

/// The subgraph formed by one block, with vertices and edges relabelled
/// densely in ascending original order.
struct BlockGraph {
  Graph graph;
  std::vector<VertexId> vertex_of;  // local vertex -> original vertex
  std::vector<EdgeId> edge_of;      // local edge -> original edge
};
BlockGraph extract_block(const Graph& g, const Block& block);

}  // namespace ecss
