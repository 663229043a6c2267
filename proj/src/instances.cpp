#include "ecss/instances.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "ecss/rng.hpp"

namespace ecss {

Graph gen_cycle(int n) {
  if (n < 3) throw std::invalid_argument("gen_cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph gen_complete(int n) {
  if (n < 3) throw std::invalid_argument("gen_complete: n must be at least 3");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph gen_theta(int a, int b, int c) {
  const int lengths[] = {a, b, c};
  if (std::any_of(std::begin(lengths), std::end(lengths), [](int l) { return l < 1; })) {
    throw std::invalid_argument("gen_theta: path lengths must be positive");
  }
  if (std::count(std::begin(lengths), std::end(lengths), 1) > 1) {
    throw std::invalid_argument("gen_theta: at most one path may have length 1");
  }
  std::vector<Edge> edges;
  int next = 2;
  for (int len : lengths) {
    int prev = 0;
    for (int step = 1; step < len; ++step) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph(next, std::move(edges));
}

Graph gen_tight(int k) {
  if (k < 1) throw std::invalid_argument("gen_tight: k must be positive");
  const int n = 3 * k + 2;
  auto x = [](int i, int j) { return 2 + 3 * (i - 1) + (j - 1); };
  std::vector<Edge> edges;
  edges.push_back({0, 1});
  for (int i = 1; i < k; ++i) edges.push_back({x(i, 3), x(i + 1, 1)});
  for (int i = 1; i <= k; ++i) {
    edges.push_back({0, x(i, 1)});
    edges.push_back({x(i, 1), x(i, 2)});
    edges.push_back({x(i, 2), x(i, 3)});
    edges.push_back({x(i, 3), 1});
  }
  return Graph(n, std::move(edges));
}

Graph gen_random_2connected(int n, int extra_edges, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_random_2connected: n must be at least 3");
  const long max_extra = static_cast<long>(n) * (n - 1) / 2 - n;
  if (extra_edges < 0 || extra_edges > max_extra) {
    throw std::invalid_argument("gen_random_2connected: extra_edges must lie in [0, n(n-1)/2 - n]");
  }
  Rng rng(seed);
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span<VertexId>(perm));

  std::set<Edge> chosen;
  for (int i = 0; i < n; ++i) {
    VertexId a = perm[static_cast<std::size_t>(i)];
    VertexId b = perm[static_cast<std::size_t>((i + 1) % n)];
    chosen.insert({std::min(a, b), std::max(a, b)});
  }
  std::vector<Edge> pool;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!chosen.contains({u, v})) pool.push_back({u, v});
    }
  }
  for (int i = 0; i < extra_edges; ++i) {
    const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng.below(pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    chosen.insert(pool[static_cast<std::size_t>(i)]);
  }
  return Graph(n, std::vector<Edge>(chosen.begin(), chosen.end()));
}

std::vector<SmallInstance> small_suite(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<SmallInstance> out;
  for (int i = 0; i < count; ++i) {
    SmallInstance inst;
    inst.n = 5 + static_cast<int>(rng.below(6));
    const int max_extra = std::min(20 - inst.n, inst.n * (inst.n - 1) / 2 - inst.n);
    inst.extra_edges = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_extra) + 1));
    inst.seed = rng.next();
    inst.name = "small-" + std::to_string(i);
    inst.graph = gen_random_2connected(inst.n, inst.extra_edges, inst.seed);
    out.push_back(std::move(inst));
  }
  return out;
}

ParseError::ParseError(Kind kind, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

namespace {

bool read_two(const std::string& line, long& a, long& b) {
  std::istringstream fields(line);
  std::string x;
  std::string y;
  std::string extra;
  if (!(fields >> x >> y) || (fields >> extra)) return false;
  auto num = [](const std::string& s, long& out) {
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  return num(x, a) && num(y, b);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  using Kind = ParseError::Kind;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long n = 0;
  long m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    long a = 0;
    long b = 0;
    if (!read_two(line, a, b)) throw ParseError(Kind::kMalformed, line_no, "expected two integers");
    if (!have_header) {
      if (a < 0 || b < 0 || a > 100'000'000 || b > 100'000'000) {
        throw ParseError(Kind::kMalformed, line_no, "bad header counts");
      }
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (static_cast<long>(edges.size()) == m) {
      throw ParseError(Kind::kCountMismatch, line_no, "more edges than declared");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(Kind::kOutOfRange, line_no, "vertex out of range");
    if (a == b) throw ParseError(Kind::kSelfLoop, line_no, "self-loop");
    if (a > b) throw ParseError(Kind::kMalformed, line_no, "endpoints must be listed as u < v");
    const Edge e{static_cast<VertexId>(a), static_cast<VertexId>(b)};
    if (!seen.insert(e).second) throw ParseError(Kind::kDuplicateEdge, line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(Kind::kMalformed, line_no, "missing 'n m' header");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(Kind::kCountMismatch, line_no, "fewer edges than declared");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace ecss
