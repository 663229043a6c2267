// Acceptance checks. Each criterion prints one PASS/FAIL line; the exit
// status is non-zero if any selected criterion fails.
//
//   ecss_acceptance                 run all criteria
//   ecss_acceptance --criterion N   run criterion N only

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ecss/bench.hpp"
#include "ecss/connectivity.hpp"
#include "ecss/instances.hpp"
#include "ecss/local_search.hpp"
#include "ecss/minimal_solution.hpp"
#include "ecss/oracle.hpp"
#include "ecss/report.hpp"
#include "ecss/segments.hpp"
#include "test_support.hpp"

using namespace ecss;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 5) messages_ << (messages_.tellp() > 0 ? "; " : "") << what;
    }
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    std::ostringstream out;
    out << summary << " (" << checks_ - failures_ << "/" << checks_ << " checks)";
    if (failures_ > 0) out << " failures: " << messages_.str();
    o.detail = out.str();
    return o;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream messages_;
};

bool bf_minimal(const Graph& g, const EdgeSet& f, Mode mode) {
  if (!testing::bf_feasible(g, f, mode)) return false;
  for (EdgeId e : f.ids()) {
    EdgeSet less = f;
    less.erase(e);
    if (testing::bf_feasible(g, less, mode)) return false;
  }
  return true;
}

std::string mode_name(Mode mode) { return to_string(mode); }

constexpr std::uint64_t kSuiteSeed = 1;
constexpr int kSuiteSize = 300;

struct SuiteRun {
  const SmallInstance* instance = nullptr;
  Mode mode = Mode::kTwoEdge;
  SolveReport report;
};

// The 300-instance small suite solved in both modes, shared by criteria 2,
// 6 and 8.
const std::vector<SuiteRun>& suite_runs() {
  static const std::vector<SmallInstance> instances = small_suite(kSuiteSeed, kSuiteSize);
  static const std::vector<SuiteRun> runs = [] {
    std::vector<SuiteRun> out;
    for (const SmallInstance& inst : instances) {
      for (Mode mode : {Mode::kTwoEdge, Mode::kTwoVertex}) {
        out.push_back({&inst, mode, solve(inst.graph, mode)});
      }
    }
    return out;
  }();
  return runs;
}

Outcome criterion_tight_family() {
  Checker c;
  std::ostringstream costs;
  for (int k = 1; k <= 4; ++k) {
    const Graph g = gen_tight(k);
    for (Mode mode : {Mode::kTwoEdge, Mode::kTwoVertex}) {
      const std::size_t opt = exact_min(g, mode).opt;
      const SolveReport r = solve(g, mode);
      const std::string tag = "k=" + std::to_string(k) + " " + mode_name(mode);
      c.expect(opt == static_cast<std::size_t>(3 * k + 2), tag + " opt " + std::to_string(opt) + " != 3k+2");
      c.expect(r.cost <= static_cast<std::size_t>(4 * k),
               tag + " cost " + std::to_string(r.cost) + " > 4k=" + std::to_string(4 * k));
      c.expect(is_feasible(g, r.solution, mode), tag + " infeasible");
      c.expect(3 * r.cost <= 4 * opt, tag + " ratio above 4/3");
      costs << " " << tag << ":" << r.cost << "/" << opt;
    }
  }
  return c.outcome("cost/opt" + costs.str());
}

Outcome criterion_ratio_suite() {
  Checker c;
  Rational worst(0);
  for (const SuiteRun& run : suite_runs()) {
    const Graph& g = run.instance->graph;
    const std::string tag = run.instance->name + " " + mode_name(run.mode);
    c.expect(testing::bf_feasible(g, run.report.solution, run.mode), tag + " infeasible");
    c.expect(bf_minimal(g, run.report.solution, run.mode), tag + " not minimal");
    ExactOptions opts;
    opts.incumbent = run.report.solution;
    const std::size_t opt = exact_min(g, run.mode, opts).opt;
    c.expect(3 * run.report.cost <= 4 * opt,
             tag + " cost " + std::to_string(run.report.cost) + " opt " + std::to_string(opt));
    worst = std::max(worst, Rational(static_cast<std::int64_t>(run.report.cost), static_cast<std::int64_t>(opt)));
  }
  return c.outcome(std::to_string(suite_runs().size()) + " runs, worst ratio " + to_string(worst));
}

Outcome criterion_oracle_cross_validation() {
  Checker c;
  Rng rng(303);
  int produced = 0;
  while (produced < 100) {
    const int n = 4 + static_cast<int>(rng.below(6));
    const Graph g = (produced % 2 == 0)
                        ? testing::gen_ear_graph(n, 14, rng.next())
                        : gen_random_2connected(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(14 - n, n * (n - 1) / 2 - n) + 1))),
                                                rng.next());
    if (g.num_edges() > 14) continue;
    ++produced;
    for (Mode mode : {Mode::kTwoEdge, Mode::kTwoVertex}) {
      const auto naive = testing::naive_min(g, mode);
      const std::size_t bnb = exact_min(g, mode).opt;
      c.expect(naive.has_value() && *naive == bnb,
               "n=" + std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()) + " " + mode_name(mode));
    }
  }
  return c.outcome("100 instances with m <= 14, both modes");
}

Outcome criterion_connectivity_primitives() {
  Checker c;
  Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const int max_extra = n * (n - 1) / 2 - n;
    const Graph g = gen_random_2connected(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(max_extra) + 1)), rng.next());
    const EdgeSet f = testing::random_subset(g, rng, 2 + rng.below(3), 5);
    const auto bridges = find_bridges(g, f).ids();
    c.expect(std::set<EdgeId>(bridges.begin(), bridges.end()) == testing::bf_bridges(g, f),
             "bridges trial " + std::to_string(trial));
    if (is_spanning_connected(g, f)) {
      c.expect(find_cut_vertices(g, f) == testing::bf_cut_vertices(g, f), "cut vertices trial " + std::to_string(trial));
    }
  }
  return c.outcome("200 random subgraphs, n <= 12");
}

Outcome criterion_segments() {
  Checker c;
  Rng rng(505);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng.below(8));
    const Graph g = (trial % 2 == 0) ? testing::gen_ear_graph(n, 2 * n, rng.next())
                                     : gen_random_2connected(n, static_cast<int>(rng.below(static_cast<std::uint64_t>(n))), rng.next());
    const EdgeSet f = minimal_2vcss(g, DeletionOrder::shuffled(static_cast<std::size_t>(g.num_edges()), rng.next()));
    const std::string tag = "trial " + std::to_string(trial);
    const Decomposition d = decompose(g, f);
    const std::vector<int> deg = degrees(g, f);
    if (d.whole_cycle) {
      bool cycle = f.size() == static_cast<std::size_t>(g.num_vertices());
      for (int x : deg) cycle = cycle && x == 2;
      c.expect(cycle, tag + " whole-cycle flag on a non-cycle");
      continue;
    }
    std::map<EdgeId, int> owner;
    bool partition = true;
    for (const Segment& s : d.segments) {
      for (EdgeId e : s.edges) partition = partition && owner.emplace(e, 1).second && f.contains(e);
      for (VertexId v : s.internal()) c.expect(deg[static_cast<std::size_t>(v)] == 2, tag + " internal degree");
      c.expect(deg[static_cast<std::size_t>(s.end_a())] >= 3 && deg[static_cast<std::size_t>(s.end_b())] >= 3,
               tag + " end degree");
      for (Mode mode : {Mode::kTwoVertex, Mode::kTwoEdge}) {
        c.expect((classify(g, f, s, mode).strength == Strength::kStrong) == testing::bf_segment_is_strong(g, f, s, mode),
                 tag + " strength " + mode_name(mode));
      }
    }
    c.expect(partition && owner.size() == f.size(), tag + " not a partition");
  }
  return c.outcome("100 minimal 2-VCSS solutions");
}

Outcome criterion_no_closed_short_segment() {
  Checker c;
  std::size_t checked = 0;
  for (const SuiteRun& run : suite_runs()) {
    if (run.mode != Mode::kTwoEdge) continue;
    ++checked;
    const Decomposition d = decompose(run.instance->graph, run.report.solution);
    for (const Segment& s : d.segments) {
      c.expect(!(s.closed() && is_short(s)), run.instance->name + " has a closed short segment");
    }
  }
  return c.outcome(std::to_string(checked) + " 2ecss solutions");
}

// For a feasible certificate, checks its objective against the exact
// 2-ECSS optimum. Returns whether the certificate was feasible.
bool check_against_opt(Checker& c, const Graph& g, const DualCertificate& cert, const std::string& tag) {
  const DualCheck check = verify_dual(g, cert);
  if (!check.feasible) return false;
  const std::size_t opt = exact_min(g, Mode::kTwoEdge).opt;
  c.expect(check.objective <= Rational(static_cast<std::int64_t>(opt)),
           tag + " objective " + to_string(check.objective) + " > opt " + std::to_string(opt));
  return true;
}

Outcome criterion_weak_duality() {
  Checker c;
  std::size_t feasible = 0;
  for (int n = 3; n <= 12; ++n) {
    const Graph g = gen_cycle(n);
    DualCertificate cert;
    for (VertexId v = 0; v < n; ++v) cert.y[{v}] = Rational(1, 2);
    const DualCheck check = verify_dual(g, cert);
    c.expect(check.feasible && check.objective == Rational(n), "C_" + std::to_string(n) + " singleton certificate");
    if (check_against_opt(c, g, cert, "C_" + std::to_string(n))) ++feasible;
  }
  for (int k = 1; k <= 4; ++k) {
    const Graph g = gen_tight(k);
    DualCertificate cert;
    for (VertexId v = 2; v < g.num_vertices(); ++v) cert.y[{v}] = Rational(1, 2);
    const bool ok = check_against_opt(c, g, cert, "tight k=" + std::to_string(k));
    c.expect(ok, "tight k=" + std::to_string(k) + " certificate infeasible");
    if (ok) ++feasible;
  }
  // Random certificates on small-suite graphs, halved until feasible.
  Rng rng(707);
  const auto suite = small_suite(kSuiteSeed, 60);
  for (const SmallInstance& inst : suite) {
    const Graph& g = inst.graph;
    DualCertificate cert;
    const int sets = 1 + static_cast<int>(rng.below(6));
    for (int i = 0; i < sets; ++i) {
      std::vector<VertexId> set;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (rng.below(3) == 0) set.push_back(v);
      }
      if (set.empty() || static_cast<int>(set.size()) == g.num_vertices()) continue;
      cert.y[set] += Rational(static_cast<std::int64_t>(1 + rng.below(4)), static_cast<std::int64_t>(1 + rng.below(4)));
    }
    if (rng.below(2) == 0) cert.z[static_cast<EdgeId>(rng.below(static_cast<std::uint64_t>(g.num_edges())))] = Rational(1, 2);
    while (!verify_dual(g, cert).feasible) {
      for (auto& [set, value] : cert.y) value /= Rational(2);
    }
    if (check_against_opt(c, g, cert, inst.name)) ++feasible;
  }
  return c.outcome(std::to_string(feasible) + " feasible certificates");
}

Outcome criterion_monotonicity() {
  Checker c;
  std::size_t steps = 0;
  for (const SuiteRun& run : suite_runs()) {
    const std::string tag = run.instance->name + " " + mode_name(run.mode);
    const SolveReport& r = run.report;
    c.expect(r.improvement_count <= static_cast<std::size_t>(run.instance->graph.num_edges()), tag + " too many improvements");
    c.expect(r.improvements.size() == r.improvement_count, tag + " telemetry size");
    std::size_t last = r.initial_cost;
    for (const ImprovementStep& s : r.improvements) {
      c.expect(s.after < s.before, tag + " non-decreasing step");
      c.expect(s.before <= last, tag + " step does not continue from the previous size");
      last = s.after;
      ++steps;
    }
    c.expect(r.cost <= last, tag + " final cost above last step");
  }
  return c.outcome(std::to_string(steps) + " improvement steps");
}

Outcome criterion_determinism() {
  Checker c;
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const SmallInstance& inst : small_suite(kSuiteSeed, 20)) graphs.emplace_back(inst.name, inst.graph);
  graphs.emplace_back("random-200", gen_random_2connected(200, 400, 11));
  graphs.emplace_back("tight-4", gen_tight(4));
  for (const auto& [name, g] : graphs) {
    for (Mode mode : {Mode::kTwoEdge, Mode::kTwoVertex}) {
      for (DeletionOrder::Kind kind : {DeletionOrder::Kind::kAscending, DeletionOrder::Kind::kShuffled}) {
        SolveOptions opts;
        opts.order = kind;
        opts.seed = 12345;
        std::string first;
        for (int rep = 0; rep < 3; ++rep) {
          SolveReport r = solve(g, mode, opts);
          const OracleStatus status = run_oracle(g, r, false);
          const std::string text = report_json(g, r, status, false).dump(2);
          if (rep == 0) {
            first = text;
          } else {
            c.expect(text == first, name + " " + mode_name(mode) + " differs on repeat");
          }
        }
      }
    }
  }
  return c.outcome(std::to_string(graphs.size()) + " instances x 2 modes x 2 orders x 3 runs");
}

Outcome criterion_scale() {
  Checker c;
  const Graph g = gen_random_2connected(1000, 2000, 2024);
  c.expect(g.num_edges() == 3000, "instance does not have m = 3000");
  const auto start = std::chrono::steady_clock::now();
  const SolveReport r = solve(g, Mode::kTwoEdge);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(is_2ecss(g, r.solution), "random n=1000 output infeasible");
  c.expect(seconds < 60.0, "random n=1000 took " + std::to_string(seconds) + " s");
  const Graph cyc = gen_cycle(1000);
  SolveReport rc = solve(cyc, Mode::kTwoEdge);
  c.expect(rc.cost == 1000, "C_1000 cost " + std::to_string(rc.cost));
  run_oracle(cyc, rc, false);
  c.expect(rc.ratio_vs_oracle == Rational(1), "C_1000 ratio is not 1");
  std::ostringstream out;
  out << "n=1000 m=3000 cost " << r.cost << " in " << seconds << " s; C_1000 cost " << rc.cost;
  return c.outcome(out.str());
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"tight family reproduction", criterion_tight_family},
      {"ratio property suite", criterion_ratio_suite},
      {"oracle cross-validation", criterion_oracle_cross_validation},
      {"connectivity primitive oracles", criterion_connectivity_primitives},
      {"segment correctness", criterion_segments},
      {"no closed short segment in 2-ECSS output", criterion_no_closed_short_segment},
      {"weak duality", criterion_weak_duality},
      {"termination and monotonicity", criterion_monotonicity},
      {"determinism", criterion_determinism},
      {"scale smoke test", criterion_scale},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ecss acceptance checks"};
  std::optional<int> only;
  app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (only && *only != number) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria()[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << number << " [" << criteria()[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << " [" << seconds << " s]" << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
