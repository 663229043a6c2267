#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecss/graph.hpp"
#include "ecss/rational.hpp"

namespace ecss {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactOptions {
  std::uint64_t node_budget = 10'000'000;
  /// A known feasible solution; the search then only looks for strictly
  /// smaller ones.
  std::optional<EdgeSet> incumbent;
};

struct ExactResult {
  std::size_t opt = 0;
  EdgeSet witness;
  std::uint64_t nodes = 0;
};

/// Minimum-cardinality feasible edge set by branch and bound over edges in
/// ascending id (include branch first). Prunes on the degree bound and on
/// infeasibility of the edges still available.
///
/// Throws InfeasibleInput when g itself is infeasible for
/// `mode`, and BudgetExceeded when the node budget runs out.
ExactResult exact_min(const Graph& g, Mode mode, const ExactOptions& options = {});

/// Singleton cuts of (EC) summed over all vertices: every vertex needs two
/// solution edges, so |F| >= n.
std::size_t degree_lower_bound(const Graph& g);

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse dual solution of the cut LP: y on vertex subsets, z on edges.
struct DualCertificate {
  std::map<std::vector<VertexId>, Rational> y;  // keys sorted, proper non-empty
  std::map<EdgeId, Rational> z;
};

struct DualCheck {
  bool feasible = false;
  Rational objective;
  std::vector<EdgeId> violated;  // edges whose constraint fails
};

/// Checks, in exact arithmetic, sum_{S : e in delta(S)} y_S <= 1 + z_e for
/// every edge and reports 2 * sum y - sum z. Throws CertificateError for
/// malformed sets (empty, all of V, unsorted or out-of-range members) or
/// negative values.
DualCheck verify_dual(const Graph& g, const DualCertificate& cert);

/// Text format, one entry per line, '#' comments:
///   y v1,v2,...,vk p/q
///   z u v p/q
DualCertificate parse_certificate(const Graph& g, std::istream& in);
std::string serialize_certificate(const Graph& g, const DualCertificate& cert);

}  // namespace ecss
