#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecss/graph.hpp"

namespace ecss {

/// Cycle 0-1-...-(n-1)-0, edge i joins i and i+1 (the closing edge is last).
Graph gen_cycle(int n);

/// K_n with edges in lexicographic (u, v) order.
Graph gen_complete(int n);

/// Hubs 0 and 1 joined by three internally disjoint paths of lengths a, b,
/// c (each >= 1, at most one of them 1). Paths are laid out in argument
/// order, each walked from hub 0 to hub 1.
Graph gen_theta(int a, int b, int c);

/// Tight family for the local search, k >= 1, on n = 3k + 2 vertices.
///
/// Hubs a = 0 and b = 1 are joined by k paths a - x(i,1) - x(i,2) - x(i,3) - b
/// with x(i,j) = 2 + 3(i-1) + (j-1). Added on top: the edge ab and the
/// connectors x(i,3) - x(i+1,1). The Hamiltonian cycle
///   a, x(1,1..3), x(2,1..3), ..., x(k,1..3), b, a
/// shows the optimum is 3k + 2 = n, while the k paths alone (4k edges) are
/// an inclusion-wise minimal 2-VCSS whose segments are all long, so no
/// improvement process ever starts on it. The edge ab and the connectors
/// get the lowest ids, so ascending-order greedy deletion removes them
/// first and lands on the 4k-edge solution.
Graph gen_tight(int k);

/// A Hamiltonian cycle on a seeded permutation of 0..n-1 plus
/// `extra_edges` distinct chords drawn without replacement (partial
/// Fisher-Yates over the lexicographically sorted non-cycle pairs).
/// Randomness comes from Rng (mt19937_64 with rejection-sampled bounds).
/// Edges are emitted in lexicographic (u, v) order.
Graph gen_random_2connected(int n, int extra_edges, std::uint64_t seed);

/// Parameters of the seeded small benchmark suite: n in [5, 10], m <= 20.
struct SmallInstance {
  std::string name;
  int n = 0;
  int extra_edges = 0;
  std::uint64_t seed = 0;
  Graph graph;
};
std::vector<SmallInstance> small_suite(std::uint64_t seed, int count);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kMalformed, kCountMismatch, kOutOfRange, kSelfLoop, kDuplicateEdge };
  ParseError(Kind kind, int line, const std::string& what);
  Kind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Edge-list text: first data line "n m", then m lines "u v" with
/// 0 <= u < v < n. Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

}  // namespace ecss
