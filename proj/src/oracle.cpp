#include "ecss/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "ecss/connectivity.hpp"

namespace ecss {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rational> parse_rational(const std::string& text) {
  auto parse_int = [](std::string_view s, std::int64_t& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  const std::string_view view(text);
  const auto slash = view.find('/');
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(view, num)) return std::nullopt;
  } else {
    if (!parse_int(view.substr(0, slash), num)) return std::nullopt;
    const std::string_view rest = view.substr(slash + 1);
    if (rest.empty() || rest.front() == '-' || rest.front() == '+') return std::nullopt;
    if (!parse_int(rest, den) || den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, Mode mode, std::uint64_t budget)
      : g_(g),
        mode_(mode),
        budget_(budget),
        chosen_(EdgeSet::none(g)),
        available_(EdgeSet::all(g)),
        chosen_deg_(static_cast<std::size_t>(g.num_vertices()), 0),
        available_deg_(static_cast<std::size_t>(g.num_vertices()), 0) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) available_deg_[static_cast<std::size_t>(v)] = g.degree(v);
  }

  void seed(EdgeSet incumbent) {
    best_ = incumbent.size();
    witness_ = std::move(incumbent);
  }

  void run() {
    deficit_ = 2 * static_cast<long>(g_.num_vertices());
    search(0);
  }

  std::size_t best() const { return best_; }
  const EdgeSet& witness() const { return witness_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void search(EdgeId next) {
    if (++nodes_ > budget_) throw BudgetExceeded("exact_min: node budget of " + std::to_string(budget_) + " exceeded");
    // Each further edge lowers the total degree deficit by at most 2.
    const std::size_t bound = chosen_.size() + static_cast<std::size_t>((deficit_ + 1) / 2);
    if (bound >= best_) return;
    if (next == g_.num_edges()) return;

    const Edge& ed = g_.edge(next);
    const auto u = static_cast<std::size_t>(ed.u);
    const auto v = static_cast<std::size_t>(ed.v);

    // Include.
    const long gain = (chosen_deg_[u] < 2 ? 1 : 0) + (chosen_deg_[v] < 2 ? 1 : 0);
    chosen_.insert(next);
    ++chosen_deg_[u];
    ++chosen_deg_[v];
    deficit_ -= gain;
    if (deficit_ == 0 && is_feasible(g_, chosen_, mode_)) {
      // Any superset costs more, so this branch is finished.
      if (chosen_.size() < best_) {
        best_ = chosen_.size();
        witness_ = chosen_;
      }
    } else {
      search(next + 1);
    }
    deficit_ += gain;
    --chosen_deg_[u];
    --chosen_deg_[v];
    chosen_.erase(next);

    // Exclude.
    available_.erase(next);
    --available_deg_[u];
    --available_deg_[v];
    if (available_deg_[u] >= 2 && available_deg_[v] >= 2 && is_feasible(g_, available_, mode_)) {
      search(next + 1);
    }
    ++available_deg_[u];
    ++available_deg_[v];
    available_.insert(next);
  }

  const Graph& g_;
  Mode mode_;
  std::uint64_t budget_;
  EdgeSet chosen_;
  EdgeSet available_;
  std::vector<int> chosen_deg_;
  std::vector<int> available_deg_;
  long deficit_ = 0;
  std::size_t best_ = 0;
  EdgeSet witness_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExactResult exact_min(const Graph& g, Mode mode, const ExactOptions& options) {
  const EdgeSet everything = EdgeSet::all(g);
  if (!is_feasible(g, everything, mode)) {
    throw InfeasibleInput("exact_min: graph has no feasible " + to_string(mode));
  }
  BranchAndBound bnb(g, mode, options.node_budget);
  if (options.incumbent && options.incumbent->universe() == everything.universe() &&
      is_feasible(g, *options.incumbent, mode)) {
    bnb.seed(*options.incumbent);
  } else {
    bnb.seed(everything);
  }
  bnb.run();
  return {bnb.best(), bnb.witness(), bnb.nodes()};
}

std::size_t degree_lower_bound(const Graph& g) { return static_cast<std::size_t>(g.num_vertices()); }

DualCheck verify_dual(const Graph& g, const DualCertificate& cert) {
  const int n = g.num_vertices();
  std::vector<Rational> load(static_cast<std::size_t>(g.num_edges()), Rational(0));
  std::vector<char> inside(static_cast<std::size_t>(n), 0);
  Rational y_total(0);
  for (const auto& [set, value] : cert.y) {
    if (set.empty() || static_cast<int>(set.size()) >= n) {
      throw CertificateError("y set must be a proper non-empty vertex subset");
    }
    if (!std::is_sorted(set.begin(), set.end()) || std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw CertificateError("y set must be sorted without repeats");
    }
    if (set.front() < 0 || set.back() >= n) throw CertificateError("y set has a vertex out of range");
    if (value < Rational(0)) throw CertificateError("y value is negative");
    if (value == Rational(0)) continue;
    y_total += value;
    for (VertexId v : set) inside[static_cast<std::size_t>(v)] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (inside[static_cast<std::size_t>(ed.u)] != inside[static_cast<std::size_t>(ed.v)]) {
        load[static_cast<std::size_t>(e)] += value;
      }
    }
    for (VertexId v : set) inside[static_cast<std::size_t>(v)] = 0;
  }

  Rational z_total(0);
  std::vector<Rational> slack(static_cast<std::size_t>(g.num_edges()), Rational(1));
  for (const auto& [e, value] : cert.z) {
    if (e < 0 || e >= g.num_edges()) throw CertificateError("z refers to an unknown edge");
    if (value < Rational(0)) throw CertificateError("z value is negative");
    z_total += value;
    slack[static_cast<std::size_t>(e)] += value;
  }

  DualCheck out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (load[static_cast<std::size_t>(e)] > slack[static_cast<std::size_t>(e)]) out.violated.push_back(e);
  }
  out.feasible = out.violated.empty();
  out.objective = Rational(2) * y_total - z_total;
  return out;
}

DualCertificate parse_certificate(const Graph& g, std::istream& in) {
  DualCertificate cert;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw CertificateError("certificate line " + std::to_string(line_no) + ": " + what);
  };
  auto vertex = [&](const std::string& text) {
    VertexId v = -1;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("bad vertex '" + text + "'");
    if (v < 0 || v >= g.num_vertices()) fail("vertex " + text + " out of range");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    if (tag == "y") {
      std::string members;
      std::string value;
      std::string extra;
      if (!(fields >> members >> value) || (fields >> extra)) fail("expected 'y v1,v2,... p/q'");
      std::vector<VertexId> set;
      std::stringstream split(members);
      std::string item;
      while (std::getline(split, item, ',')) set.push_back(vertex(item));
      std::sort(set.begin(), set.end());
      if (std::adjacent_find(set.begin(), set.end()) != set.end()) fail("repeated vertex in y set");
      if (set.empty() || static_cast<int>(set.size()) >= g.num_vertices()) fail("y set must be a proper non-empty subset");
      const auto r = parse_rational(value);
      if (!r) fail("bad rational '" + value + "'");
      if (*r < Rational(0)) fail("negative y value");
      if (!cert.y.emplace(std::move(set), *r).second) fail("duplicate y set");
    } else if (tag == "z") {
      std::string a;
      std::string b;
      std::string value;
      std::string extra;
      if (!(fields >> a >> b >> value) || (fields >> extra)) fail("expected 'z u v p/q'");
      const auto e = g.find_edge(vertex(a), vertex(b));
      if (!e) fail("z refers to a non-edge");
      const auto r = parse_rational(value);
      if (!r) fail("bad rational '" + value + "'");
      if (*r < Rational(0)) fail("negative z value");
      if (!cert.z.emplace(*e, *r).second) fail("duplicate z edge");
    } else {
      fail("unknown entry '" + tag + "'");
    }
  }
  return cert;
}

std::string serialize_certificate(const Graph& g, const DualCertificate& cert) {
  std::ostringstream out;
  for (const auto& [set, value] : cert.y) {
    out << "y ";
    for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
    out << ' ' << to_string(value) << '\n';
  }
  for (const auto& [e, value] : cert.z) {
    out << "z " << g.edge(e).u << ' ' << g.edge(e).v << ' ' << to_string(value) << '\n';
  }
  return out.str();
}

}  // namespace ecss
