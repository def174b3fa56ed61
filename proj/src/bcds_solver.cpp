#include "bcds/bcds_solver.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "bcds/errors.hpp"
#include "bcds/tree.hpp"

namespace bcds {

namespace mp = boost::multiprecision;

void BcdsConfig::validate() const {
  if (c <= 0 || c > 1) throw InputError("parameter c must lie in (0, 1], got " + to_fraction_string(c));
  if (qst_size_cap < 1) throw InputError("QST size cap must be positive");
}

int ceil_ck(const Rational& c, int k) { return static_cast<int>(ceil_int(c * k)); }

int bicriteria_size_bound(const Rational& c, int k) { return k + 2 * ceil_ck(c, k); }

Profit quota_for_guess(const Rational& c, int guess) {
  const double fraction = -std::expm1(-to_double(c));  // 1 - e^{-c}
  const double x = std::nextafter(fraction * guess, -std::numeric_limits<double>::infinity());
  return static_cast<Profit>(std::ceil(x));
}

double bcds_ratio_bound(const Rational& c) {
  return -std::expm1(-to_double(c)) / static_cast<double>(ceil_int(8 * c) + 4);
}

namespace {

void check_budget(const Graph& g, int k) {
  if (k < 1 || k > g.num_vertices()) {
    throw InputError("budget k=" + std::to_string(k) + " outside [1, " + std::to_string(g.num_vertices()) + "]");
  }
}

SteinerTree run_backend(const Graph& g, const ProfitLabeling& labels, Profit quota, const BcdsConfig& cfg) {
  QstInstance inst{g, labels.profit, quota};
  return cfg.backend == QstBackend::exact ? qst_exact(inst, cfg.qst_size_cap) : qst_heuristic(inst);
}

struct Probe {
  bool feasible = false;
  bool consistent = false;
  SteinerTree tree;
  // Filled lazily for consistent probes.
  bool evaluated = false;
  SteinerTree best;
  int dominated = 0;
};

}  // namespace

BcdsSolution solve_bcds(const Graph& g, int k, const BcdsConfig& cfg) {
  cfg.validate();
  require_connected(g);
  check_budget(g, k);
  const int n = g.num_vertices();
  const ProfitLabeling labels = greedy_dominating_set(g);

  const int exact_bound = bicriteria_size_bound(cfg.c, k);
  const int size_bound = cfg.backend == QstBackend::exact ? exact_bound : 2 * exact_bound - 1;

  std::map<Profit, Probe> probes;
  auto probe = [&](int guess) -> const Probe& {
    const Profit quota = quota_for_guess(cfg.c, guess);
    auto [it, inserted] = probes.try_emplace(quota);
    if (inserted) {
      try {
        it->second.tree = run_backend(g, labels, quota, cfg);
        it->second.feasible = true;
        it->second.consistent = it->second.tree.size() <= size_bound;
      } catch (const InfeasibleError&) {
        it->second.feasible = false;
      }
    }
    return it->second;
  };

  std::vector<int> kept;
  if (cfg.search == OptSearch::linear) {
    for (int guess = n; guess >= k; --guess) {
      if (probe(guess).consistent) kept.push_back(guess);
    }
  } else if (probe(k).consistent) {
    // Tree size never shrinks as the quota grows, so consistency is a prefix
    // of [k, n]; bisect for its end and keep the whole prefix.
    int lo = k;
    int hi = n;
    while (lo < hi) {
      const int mid = lo + (hi - lo + 1) / 2;
      if (probe(mid).consistent) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    for (int guess = lo; guess >= k; --guess) {
      if (probe(guess).consistent) kept.push_back(guess);
    }
  }

  BcdsSolution out;
  const Probe* chosen = nullptr;
  Profit chosen_quota = 0;
  for (int guess : kept) {  // descending guesses, so the last tie seen has the smallest quota
    const Profit quota = quota_for_guess(cfg.c, guess);
    Probe& p = probes.at(quota);
    if (!p.evaluated) {
      p.best = best_k_subtree(RootedTree::from_steiner(p.tree, labels.profit), k);
      p.dominated = static_cast<int>(closed_neighborhood(g, p.best.vertices).size());
      p.evaluated = true;
    }
    if (chosen == nullptr || p.dominated > chosen->dominated ||
        (p.dominated == chosen->dominated && quota <= chosen_quota)) {
      chosen = &p;
      chosen_quota = quota;
      out.opt_guess_used = guess;
    }
  }

  out.stage.probes = static_cast<int>(probes.size());
  out.stage.consistent_guesses = static_cast<int>(kept.size());
  if (chosen == nullptr) {
    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (g.degree(v) > g.degree(best)) best = v;
    }
    out.vertices = {best};
    out.fallback = true;
  } else {
    out.vertices = chosen->best.vertices;
    out.stage.tree_size = chosen->tree.size();
    out.stage.tree_profit = chosen->tree.total_profit;
    out.stage.quota = chosen_quota;
    if (k >= 2 || chosen->tree.size() <= k) {
      out.stage.piece_count = static_cast<int>(
          decompose_eligible(RootedTree::from_steiner(chosen->tree, labels.profit), k).pieces.size());
    }
  }
  out.profit = labels.profit_of(out.vertices);
  out.dominated = static_cast<int>(closed_neighborhood(g, out.vertices).size());
  return out;
}

SteinerTree bicriteria_stage(const Graph& g, int k, const BcdsConfig& cfg, int opt) {
  cfg.validate();
  require_connected(g);
  check_budget(g, k);
  if (opt < 0 || opt > g.num_vertices()) throw InputError("optimum outside [0, n]");
  const ProfitLabeling labels = greedy_dominating_set(g);
  return run_backend(g, labels, quota_for_guess(cfg.c, opt), cfg);
}

RecurrenceReport recurrence_check(const Graph& g, int k, const VertexSet& optimal, const Rational& c) {
  require_connected(g);
  check_budget(g, k);
  if (c <= 0 || c > 1) throw InputError("parameter c must lie in (0, 1]");
  const VertexSet l1 = normalize(optimal);
  if (l1.empty() || static_cast<int>(l1.size()) > k) throw InputError("optimal set must have 1..k vertices");
  if (!is_connected_induced(g, l1)) throw InputError("optimal set is not connected");

  const ProfitLabeling labels = greedy_dominating_set(g);
  const VertexSet l12 = closed_neighborhood(g, l1);
  const VertexSet l123 = closed_neighborhood(g, l12);
  std::vector<char> in_layers(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : l123) in_layers[static_cast<std::size_t>(v)] = 1;

  RecurrenceReport report;
  report.opt = static_cast<int>(l12.size());
  for (Vertex v : labels.pick_order) {
    if (in_layers[static_cast<std::size_t>(v)]) report.layer_picks.push_back(v);
  }

  const int steps = ceil_ck(c, k);
  report.prefix.push_back(0);
  for (int i = 0; i < steps; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const Profit gain = idx < report.layer_picks.size() ? labels.profit[static_cast<std::size_t>(report.layer_picks[idx])] : 0;
    report.prefix.push_back(report.prefix.back() + gain);
  }

  std::ostringstream log;
  const Profit opt = report.opt;
  const Rational shrink = Rational(k - 1, k);
  Rational decay = 1;  // (1 - 1/k)^i
  for (int i = 0; i <= steps; ++i) {
    const Profit gi = report.prefix[static_cast<std::size_t>(i)];
    const Rational closed_form = (1 - decay) * opt;
    const bool closed_ok = Rational(gi) >= closed_form;
    log << "i=" << i << " g=" << gi << " closed_form=" << to_fraction_string(closed_form)
        << (closed_ok ? "" : " VIOLATED");
    if (i < steps) {
      const Profit next = report.prefix[static_cast<std::size_t>(i) + 1];
      const bool step_ok = static_cast<Profit>(k) * (next - gi) >= opt - gi;
      log << " step: k*(" << next << "-" << gi << ") >= " << opt << "-" << gi << (step_ok ? "" : " VIOLATED");
      report.ok = report.ok && step_ok;
    }
    log << '\n';
    report.ok = report.ok && closed_ok;
    decay *= shrink;
  }
  report.transcript = log.str();
  return report;
}

}  // namespace bcds
