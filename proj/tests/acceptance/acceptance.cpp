// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each check uses fixed seeds, so a run is reproducible bit for bit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "json.hpp"

#include "../unit/support.hpp"
#include "bcds/bcds_solver.hpp"
#include "bcds/cli.hpp"
#include "bcds/edge_vertex.hpp"
#include "bcds/generators.hpp"
#include "bcds/oracles.hpp"
#include "bcds/rational.hpp"
#include "bcds/tree.hpp"

using namespace bcds;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects the first failure message; later ones only bump the count.
class Verdict {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome finish(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s); first: " + first_};
  }

 private:
  int failures_ = 0;
  std::string first_;
};

int below(std::mt19937_64& rng, int bound) { return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(bound))); }

/// n in [lo, hi].
int between(std::mt19937_64& rng, int lo, int hi) { return lo + below(rng, hi - lo + 1); }

Graph random_graph(std::mt19937_64& rng, int lo, int hi) {
  const int n = between(rng, lo, hi);
  const double p = 0.1 + 0.1 * below(rng, 4);
  return gen_random_connected(n, p, rng());
}

RootedTree random_tree(std::mt19937_64& rng, int n, int max_profit) {
  const Graph g = gen_random_tree(n, rng());
  std::vector<Profit> profit(static_cast<std::size_t>(n), 0);
  for (auto& p : profit) p = max_profit > 0 ? below(rng, max_profit + 1) : 0;
  return RootedTree::from_graph(g, profit);
}

bool piece_connected(const RootedTree& t, const VertexSet& piece) {
  std::set<int> verts(piece.begin(), piece.end());
  std::vector<Edge> inside;
  for (const Edge& e : t.edges())
    if (verts.count(e.u) && verts.count(e.v)) inside.push_back(e);
  return testing::forest_is_single_tree(verts, inside);
}

Outcome eligible_subtree_lemma() {
  Verdict v;
  std::mt19937_64 rng(1001);
  long checks = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const RootedTree t = random_tree(rng, between(rng, 1, 60), 0);
    const EdgeSet edges = t.edges();
    for (int p = 1; p <= t.size(); ++p) {
      const EligibleSubtree e = find_eligible_subtree(t, p);
      const int size = static_cast<int>(e.vertices.size());
      v.require(size >= p / 2 && size <= p,
                "tree " + std::to_string(trial) + " p=" + std::to_string(p) + " size " + std::to_string(size));
      v.require(piece_connected(t, e.vertices), "disconnected subtree in tree " + std::to_string(trial));
      v.require(testing::literally_eligible(edges, e.vertices), "not eligible in tree " + std::to_string(trial));
      ++checks;
    }
  }
  return v.finish(std::to_string(checks) + " (tree, p) pairs");
}

Outcome decomposition_lemma() {
  Verdict v;
  std::mt19937_64 rng(1002);
  constexpr int k = 22;
  std::size_t worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const RootedTree t = random_tree(rng, 6 * k, 0);
    const Decomposition d = decompose_eligible(t, k);
    worst = std::max(worst, d.pieces.size());
    v.require(d.pieces.size() <= 12, "tree " + std::to_string(trial) + " has " + std::to_string(d.pieces.size()) + " pieces");
    std::map<Edge, int> hits;
    for (const VertexSet& piece : d.pieces) {
      v.require(piece.size() <= static_cast<std::size_t>(k), "oversized piece");
      v.require(piece_connected(t, piece), "disconnected piece");
      std::set<int> in(piece.begin(), piece.end());
      for (const Edge& e : t.edges())
        if (in.count(e.u) && in.count(e.v)) ++hits[e];
    }
    for (const Edge& e : t.edges()) v.require(hits[e] == 1, "edge not in exactly one piece");
  }
  return v.finish("max pieces " + std::to_string(worst) + " (limit 12)");
}

Outcome best_k_dp() {
  Verdict v;
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 200; ++trial) {
    const RootedTree t = random_tree(rng, between(rng, 1, 14), 9);
    const int k = between(rng, 1, 6);
    const Profit got = best_k_subtree(t, k).total_profit;
    const std::int64_t want = oracle_best_k(t, k).optimum_value;
    v.require(got == want, "tree " + std::to_string(trial) + ": dp " + std::to_string(got) + " vs oracle " + std::to_string(want));
  }
  return v.finish("200 trees agree");
}

Outcome qst_exactness() {
  Verdict v;
  std::mt19937_64 rng(1004);
  int probes = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 1, 8);
    std::vector<Profit> profit(static_cast<std::size_t>(g.num_vertices()));
    Profit total = 0;
    for (auto& p : profit) total += (p = below(rng, 2));
    for (Profit quota = 0; quota <= total; ++quota) {
      const SteinerTree t = qst_exact({g, profit, quota});
      const OracleResult o = oracle_qst(g, profit, quota);
      v.require(is_valid_steiner_tree(g, profit, t) && t.total_profit >= quota, "invalid tree");
      v.require(t.edge_count() == o.optimum_value, "instance " + std::to_string(trial) + " quota " + std::to_string(quota) +
                                                        ": " + std::to_string(t.edge_count()) + " vs " +
                                                        std::to_string(o.optimum_value));
      ++probes;
    }
  }
  return v.finish(std::to_string(probes) + " (instance, quota) pairs agree");
}

Outcome gds_recurrence() {
  Verdict v;
  std::mt19937_64 rng(1005);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 2, 12);
    const int k = between(rng, 1, std::min(4, g.num_vertices()));
    const OracleResult opt = oracle_bcds(g, k);
    const RecurrenceReport r = recurrence_check(g, k, opt.witness_vertices, Rational(1));
    v.require(r.ok, "graph " + std::to_string(trial) + ":\n" + r.transcript);
    v.require(r.opt == opt.optimum_value, "layer optimum mismatch");
  }
  return v.finish("50 graphs, recurrence and closed form hold");
}

Outcome bicriteria_stage_lemma() {
  Verdict v;
  std::mt19937_64 rng(1006);
  int runs = 0;
  for (const Rational& c : {Rational(1), Rational(7, 8)}) {
    const long double cd = static_cast<long double>(to_double(c));
    for (int trial = 0; trial < 50; ++trial) {
      const Graph g = random_graph(rng, 2, 12);
      const int k = between(rng, 1, std::min(4, g.num_vertices()));
      const int opt = static_cast<int>(oracle_bcds(g, k).optimum_value);
      BcdsConfig cfg;
      cfg.c = c;
      const SteinerTree t = bicriteria_stage(g, k, cfg, opt);
      const auto quota = static_cast<Profit>(std::ceil((1.0L - std::exp(-cd)) * opt));
      const int ck = static_cast<int>(std::ceil(cd * k - 1e-12L));
      v.require(t.total_profit >= quota, "profit " + std::to_string(t.total_profit) + " < " + std::to_string(quota));
      v.require(t.size() <= k + 2 * ck, "tree size " + std::to_string(t.size()) + " > " + std::to_string(k + 2 * ck));
      ++runs;
    }
  }
  return v.finish(std::to_string(runs) + " runs within quota and size bound");
}

Outcome bevd_guarantee() {
  Verdict v;
  std::mt19937_64 rng(1007);
  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 2, 12);
    const int k = between(rng, 1, 3);
    const EdgeSolution s = solve_bevd(g, k);
    const std::int64_t opt = oracle_bevd(g, k).optimum_value;
    v.require(static_cast<int>(s.edges.size()) <= k, "over budget");
    v.require(std::int64_t{s.dominated} * 1'000'000 >= 632'120 * opt,
              "instance " + std::to_string(trial) + ": " + std::to_string(s.dominated) + " of " + std::to_string(opt));
    worst = std::min(worst, static_cast<double>(s.dominated) / static_cast<double>(opt));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "min ratio %.6f >= 0.632120", worst);
  return v.finish(buf);
}

Outcome pevd_guarantee() {
  Verdict v;
  std::mt19937_64 rng(1008);
  int runs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 2, 12);
    const Rational h_delta = harmonic(2 * g.max_degree());
    for (int quota = 1; quota <= g.num_vertices(); ++quota) {
      const EdgeSolution s = solve_pevd(g, quota);
      const std::int64_t opt = oracle_pevd(g, quota).optimum_value;
      const Rational bound = std::min(harmonic(quota), h_delta);
      v.require(s.dominated >= quota, "quota missed");
      v.require(Rational(static_cast<std::int64_t>(s.edges.size())) <= bound * opt,
                "instance " + std::to_string(trial) + " quota " + std::to_string(quota));
      ++runs;
    }
  }
  return v.finish(std::to_string(runs) + " (instance, quota) pairs within min{H(n'), H(2D)}");
}

Outcome transform_round_trip() {
  Verdict v;
  std::mt19937_64 rng(1009);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, 3, 16);
    VertexSet s{static_cast<Vertex>(below(rng, g.num_vertices()))};
    const int target = between(rng, 2, g.num_vertices());
    while (static_cast<int>(s.size()) < target) {
      VertexSet frontier;
      for (Vertex x : closed_neighborhood(g, s))
        if (!std::binary_search(s.begin(), s.end(), x)) frontier.push_back(x);
      s.push_back(frontier[static_cast<std::size_t>(below(rng, static_cast<int>(frontier.size())))]);
      s = normalize(s);
    }
    const EdgeSet es = bcds_to_bevdc(g, s);
    v.require(es.size() + 1 == s.size(), "edge count");
    v.require(edge_set_neighborhood(g, es) == closed_neighborhood(g, s), "neighbourhood changed");
    v.require(bevdc_to_bcds(g, es) == s, "round trip changed the set");
  }
  return v.finish("100 sets restored");
}

Outcome absorption_facts() {
  Verdict v;
  std::mt19937_64 rng(1010);
  int inclusions = 0;
  auto subset = [](const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
  for (int trial = 0; trial < 20; ++trial) {
    const int m = between(rng, 1, 5);
    const int q = between(rng, 1, 9);
    SetSystem sys;
    sys.universe_size = 6;
    for (int i = 0; i < m; ++i) {
      std::vector<int> s;
      for (int x = 0; x < sys.universe_size; ++x)
        if (below(rng, 2)) s.push_back(x);
      if (s.empty()) s.push_back(below(rng, sys.universe_size));
      sys.sets.push_back(s);
    }
    const ReductionInstance c = gen_mc_to_bcds(sys, q);
    const ReductionInstance e = gen_mc_to_bevd(sys, q);
    // Recover ids from the role maps rather than assuming the layout.
    std::map<int, Vertex> set_c, set_e;
    std::map<std::pair<int, int>, Vertex> elem_c, elem_e;
    for (std::size_t id = 0; id < c.roles.size(); ++id) {
      const VertexRole& r = c.roles[id];
      if (r.kind == VertexKind::set) set_c[r.set_index] = static_cast<Vertex>(id);
      if (r.kind == VertexKind::element) elem_c[{r.element, r.copy}] = static_cast<Vertex>(id);
    }
    Vertex root = -1;
    for (std::size_t id = 0; id < e.roles.size(); ++id) {
      const VertexRole& r = e.roles[id];
      if (r.kind == VertexKind::root) root = static_cast<Vertex>(id);
      if (r.kind == VertexKind::set) set_e[r.set_index] = static_cast<Vertex>(id);
      if (r.kind == VertexKind::element) elem_e[{r.element, r.copy}] = static_cast<Vertex>(id);
    }
    v.require(root >= 0, "no root vertex");
    for (int i = 0; i < m; ++i) {
      for (int x : sys.sets[static_cast<std::size_t>(i)]) {
        for (int z = 0; z < q; ++z) {
          const VertexSet nx = closed_neighborhood(c.graph, VertexSet{elem_c.at({x, z})});
          const VertexSet ns = closed_neighborhood(c.graph, VertexSet{set_c.at(i)});
          v.require(subset(nx, ns), "BCDS graph: element copy not absorbed by its set");
          const VertexSet inner = edge_set_neighborhood(e.graph, EdgeSet{make_edge(set_e.at(i), elem_e.at({x, z}))});
          const VertexSet outer = edge_set_neighborhood(e.graph, EdgeSet{make_edge(root, set_e.at(i))});
          v.require(subset(inner, outer), "BEVD graph: membership edge not absorbed by root edge");
          inclusions += 2;
        }
      }
    }
  }
  return v.finish(std::to_string(inclusions) + " inclusions hold");
}

Outcome bcds_benchmark() {
  Verdict v;
  std::ostringstream out, err;
  const int code = cli::run({"ratio-sweep", "bcds", "--n", "12", "--n-min", "2", "--k", "4", "--k-min", "1", "--trials", "50",
                             "--seed", "1011", "--c", "7/8"},
                            out, err);
  if (code != cli::kOk) return {false, "ratio-sweep exited " + std::to_string(code) + ": " + err.str()};
  const auto doc = nlohmann::json::parse(out.str());
  const auto& trials = doc.at("trials");
  v.require(trials.size() == 50, "expected 50 trials");
  double min_ratio = 1.0, sum = 0.0;
  int below_bound = 0;
  for (const auto& t : trials) {
    // Rebuild the instance from its recorded seed and check feasibility here.
    const Graph g = gen_random_connected(t.at("n").get<int>(), 0.3, t.at("seed").get<std::uint64_t>());
    const VertexSet s = t.at("vertices").get<VertexSet>();
    const int k = t.at("k").get<int>();
    v.require(!s.empty() && static_cast<int>(s.size()) <= k && is_connected_induced(g, s),
              "infeasible solution in trial " + std::to_string(t.at("index").get<int>()));
    v.require(static_cast<int>(closed_neighborhood(g, s).size()) == t.at("solver").get<int>(), "dominated count mismatch");
    v.require(oracle_bcds(g, k).optimum_value == t.at("oracle").get<int>(), "oracle mismatch");
    const double r = t.at("ratio").get<double>();
    min_ratio = std::min(min_ratio, r);
    sum += r;
    if (r < 0.05301) ++below_bound;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "50 feasible; ratio min %.6f mean %.6f vs 0.05301 (%d below, reported only)", min_ratio,
                sum / static_cast<double>(trials.size()), below_bound);
  return v.finish(buf);
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "eligible subtree size and eligibility", 10, eligible_subtree_lemma},
      {2, "eligible decomposition of 6k-vertex trees, k=22", 5, decomposition_lemma},
      {3, "best-k DP equals exhaustive search", 30, best_k_dp},
      {4, "exact QST equals exhaustive search", 60, qst_exactness},
      {5, "greedy recurrence and closed form", 60, gds_recurrence},
      {6, "bicriteria stage quota and size bound", 120, bicriteria_stage_lemma},
      {7, "BEVD within 1-1/e of optimum", 30, bevd_guarantee},
      {8, "PEVD within harmonic bound", 60, pevd_guarantee},
      {9, "vertex/edge set round trip", 5, transform_round_trip},
      {10, "reduction absorption facts", 5, absorption_facts},
      {11, "BCDS end-to-end benchmark", 300, bcds_benchmark},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= c.limit_seconds) {
      o.pass = false;
      o.detail += " [over time limit]";
    }
    std::printf("AC%-2d %s  %-46s %7.3fs / %.0fs  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, secs, c.limit_seconds,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
