#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ecss/graph.hpp"

namespace ecss {

/// The order in which greedy deletion considers edges. Either ascending
/// edge id, or a seeded Fisher-Yates permutation of the edge ids.
class DeletionOrder {
 public:
  enum class Kind { kAscending, kShuffled };

  static DeletionOrder ascending(std::size_t num_edges);
  static DeletionOrder shuffled(std::size_t num_edges, std::uint64_t seed);

  /// The same relative order restricted to `edge_of` (local edge i is the
  /// original edge edge_of[i]), used when solving one block at a time.
  DeletionOrder restricted(std::span<const EdgeId> edge_of) const;

  Kind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  std::span<const EdgeId> sequence() const { return sequence_; }

 private:
  Kind kind_ = Kind::kAscending;
  std::uint64_t seed_ = 0;
  std::vector<EdgeId> sequence_;
};

/// Greedy reverse-delete on a 2-VCSS F. Non-protected edges are scanned
/// first, then protected ones, each group in `order`; an edge is dropped
/// whenever the remainder stays a 2-VCSS. Scanning repeats until a full
/// scan removes nothing, so the result is inclusion-wise minimal.
///
/// Throws std::invalid_argument if F is not a 2-VCSS or `protected_edges`
/// is not a subset of F.
EdgeSet deletion_pass(const Graph& g, const EdgeSet& f, const EdgeSet& protected_edges,
                      const DeletionOrder& order);

/// Inclusion-wise minimal 2-VCSS of a 2-connected graph, by greedy deletion
/// from E. Throws std::invalid_argument if g is not 2-connected.
EdgeSet minimal_2vcss(const Graph& g, const DeletionOrder& order);

}  // namespace ecss
