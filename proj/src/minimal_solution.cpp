#include "ecss/minimal_solution.hpp"

#include <numeric>
#include <stdexcept>

#include "ecss/connectivity.hpp"
#include "ecss/rng.hpp"

namespace ecss {

DeletionOrder DeletionOrder::ascending(std::size_t num_edges) {
  DeletionOrder order;
  order.sequence_.resize(num_edges);
  std::iota(order.sequence_.begin(), order.sequence_.end(), 0);
  return order;
}

DeletionOrder DeletionOrder::shuffled(std::size_t num_edges, std::uint64_t seed) {
  DeletionOrder order = ascending(num_edges);
  order.kind_ = Kind::kShuffled;
  order.seed_ = seed;
  Rng rng(seed);
  rng.shuffle(std::span<EdgeId>(order.sequence_));
  return order;
}

DeletionOrder DeletionOrder::restricted(std::span<const EdgeId> edge_of) const {
  std::vector<int> local(sequence_.size(), -1);
  for (std::size_t i = 0; i < edge_of.size(); ++i) {
    local.at(static_cast<std::size_t>(edge_of[i])) = static_cast<int>(i);
  }
  DeletionOrder out;
  out.kind_ = kind_;
  out.seed_ = seed_;
  out.sequence_.reserve(edge_of.size());
  for (EdgeId e : sequence_) {
    if (local[static_cast<std::size_t>(e)] >= 0) out.sequence_.push_back(local[static_cast<std::size_t>(e)]);
  }
  return out;
}

EdgeSet deletion_pass(const Graph& g, const EdgeSet& f, const EdgeSet& protected_edges,
                      const DeletionOrder& order) {
  if (!protected_edges.is_subset_of(f)) {
    throw std::invalid_argument("deletion_pass: protected edges must belong to the solution");
  }
  if (!is_2vcss(g, f)) throw std::invalid_argument("deletion_pass: input is not a 2-VCSS");
  if (order.sequence().size() != static_cast<std::size_t>(g.num_edges())) {
    throw std::invalid_argument("deletion_pass: order does not match the graph");
  }

  EdgeSet out = f;
  std::vector<int> deg = degrees(g, f);
  // A vertex left with degree below 2 can never be 2-connected, so only
  // edges between two vertices of degree >= 3 are worth a full check.
  auto try_delete = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    auto& du = deg[static_cast<std::size_t>(ed.u)];
    auto& dv = deg[static_cast<std::size_t>(ed.v)];
    if (du < 3 || dv < 3) return false;
    out.erase(e);
    if (is_2vcss(g, out)) {
      --du;
      --dv;
      return true;
    }
    out.insert(e);
    return false;
  };

  bool removed = true;
  while (removed) {
    removed = false;
    for (const bool protected_round : {false, true}) {
      for (EdgeId e : order.sequence()) {
        if (!out.contains(e) || protected_edges.contains(e) != protected_round) continue;
        removed = try_delete(e) || removed;
      }
    }
  }
  return out;
}

EdgeSet minimal_2vcss(const Graph& g, const DeletionOrder& order) {
  const EdgeSet everything = EdgeSet::all(g);
  if (!is_2vcss(g, everything)) throw std::invalid_argument("minimal_2vcss: graph is not 2-connected");
  return deletion_pass(g, everything, EdgeSet::none(g), order);
}

}  // namespace ecss
