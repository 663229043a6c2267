#include <doctest.h>

#include <set>

#include "ecss/connectivity.hpp"
#include "ecss/instances.hpp"
#include "ecss/minimal_solution.hpp"
#include "ecss/segments.hpp"
#include "test_support.hpp"

using namespace ecss;

namespace {

ParseError::Kind parse_kind(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error for: " << text);
  return ParseError::Kind::kMalformed;
}

}  // namespace

TEST_CASE("fixed families") {
  const Graph c = gen_cycle(5);
  CHECK(c.num_edges() == 5);
  CHECK(c.edge(4) == Edge{0, 4});
  CHECK(gen_complete(4).num_edges() == 6);
  CHECK(gen_complete(7).num_edges() == 21);

  const Graph t = gen_theta(1, 2, 2);
  CHECK(t.num_vertices() == 4);
  CHECK(t.num_edges() == 5);
  CHECK(t.edge(0) == Edge{0, 1});
  CHECK(is_2vcss(t, EdgeSet::all(t)));
  const Graph t345 = gen_theta(3, 4, 5);
  CHECK(t345.num_vertices() == 2 + 2 + 3 + 4);
  CHECK(t345.num_edges() == 12);
  CHECK_THROWS_AS(gen_theta(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
}

TEST_CASE("tight family structure") {
  for (int k = 1; k <= 6; ++k) {
    const Graph g = gen_tight(k);
    CHECK(g.num_vertices() == 3 * k + 2);
    CHECK(g.num_edges() == 5 * k);
    CHECK(is_2vcss(g, EdgeSet::all(g)));
    // Greedy ascending deletion keeps exactly the k long paths.
    const EdgeSet f = minimal_2vcss(g, DeletionOrder::ascending(static_cast<std::size_t>(g.num_edges())));
    const Decomposition d = decompose(g, f);
    if (k == 1) {
      // The single path plus ab is already a 5-cycle.
      CHECK(f.size() == 5);
      CHECK(d.whole_cycle);
      continue;
    }
    CHECK(f.size() == static_cast<std::size_t>(4 * k));
    if (k == 2) {
      CHECK(d.whole_cycle);  // two paths between a and b form an 8-cycle
      continue;
    }
    REQUIRE(d.segments.size() == static_cast<std::size_t>(k));
    for (const Segment& s : d.segments) CHECK(s.length() == 4);
  }
  CHECK_THROWS_AS(gen_tight(0), std::invalid_argument);
}

TEST_CASE("random 2-connected generator") {
  const Graph c5 = gen_random_2connected(5, 0, 123);
  CHECK(c5.num_edges() == 5);
  for (VertexId v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  const Graph g = gen_random_2connected(8, 4, 42);
  CHECK(g.num_vertices() == 8);
  CHECK(g.num_edges() == 12);
  CHECK(is_2vcss(g, EdgeSet::all(g)));
  CHECK(g == gen_random_2connected(8, 4, 42));
  CHECK_FALSE(g == gen_random_2connected(8, 4, 43));

  CHECK(gen_random_2connected(6, 9, 1) == gen_complete(6));
  CHECK_THROWS_AS(gen_random_2connected(6, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_2connected(2, 0, 1), std::invalid_argument);

  for (int i = 0; i + 1 < g.num_edges(); ++i) {
    const Edge& a = g.edge(i);
    const Edge& b = g.edge(i + 1);
    CHECK((a.u < b.u || (a.u == b.u && a.v < b.v)));
  }
}

TEST_CASE("small suite parameters") {
  const auto suite = small_suite(1, 300);
  REQUIRE(suite.size() == 300);
  std::set<int> sizes;
  for (const SmallInstance& inst : suite) {
    CHECK(inst.n >= 5);
    CHECK(inst.n <= 10);
    CHECK(inst.graph.num_edges() <= 20);
    CHECK(inst.graph.num_edges() == inst.n + inst.extra_edges);
    CHECK(is_2vcss(inst.graph, EdgeSet::all(inst.graph)));
    sizes.insert(inst.n);
  }
  CHECK(sizes.size() == 6);
  const auto again = small_suite(1, 300);
  for (std::size_t i = 0; i < suite.size(); ++i) CHECK(suite[i].graph == again[i].graph);
}

TEST_CASE("edge-list parsing") {
  const Graph g = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2\n0 2\n");
  CHECK(g == gen_cycle(3));
  CHECK(parse_edge_list("4 0\n").num_vertices() == 4);

  CHECK(parse_kind("") == ParseError::Kind::kMalformed);
  CHECK(parse_kind("3 x\n") == ParseError::Kind::kMalformed);
  CHECK(parse_kind("3 2\n0 1 2\n1 2\n") == ParseError::Kind::kMalformed);
  CHECK(parse_kind("3 2\n1 0\n1 2\n") == ParseError::Kind::kMalformed);
  CHECK(parse_kind("3 3\n0 1\n1 2\n") == ParseError::Kind::kCountMismatch);
  CHECK(parse_kind("3 1\n0 1\n1 2\n") == ParseError::Kind::kCountMismatch);
  CHECK(parse_kind("3 1\n0 3\n") == ParseError::Kind::kOutOfRange);
  CHECK(parse_kind("3 1\n-1 2\n") == ParseError::Kind::kOutOfRange);
  CHECK(parse_kind("3 1\n1 1\n") == ParseError::Kind::kSelfLoop);
  CHECK(parse_kind("3 2\n0 1\n0 1\n") == ParseError::Kind::kDuplicateEdge);

  try {
    parse_edge_list("3 2\n0 1\n# note\n0 1\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("edge lists round-trip") {
  for (const Graph& g : {gen_tight(2), gen_theta(2, 3, 4), gen_random_2connected(9, 6, 7), gen_complete(5)}) {
    CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  }
  CHECK(serialize_edge_list(gen_cycle(3)) == "3 3\n0 1\n1 2\n0 2\n");
}
