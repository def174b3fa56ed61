#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bcds/graph.hpp"
#include "bcds/greedy.hpp"
#include "bcds/quota_steiner.hpp"
#include "bcds/rational.hpp"

namespace bcds {

enum class QstBackend { exact, heuristic };
enum class OptSearch { linear, binary };

struct BcdsConfig {
  Rational c = Rational(7, 8);  // 0 < c <= 1
  QstBackend backend = QstBackend::exact;
  OptSearch search = OptSearch::linear;
  int qst_size_cap = 16;

  void validate() const;
};

/// Diagnostics from the probe that produced the returned solution.
struct StageLog {
  int tree_size = 0;
  Profit tree_profit = 0;
  Profit quota = 0;
  std::optional<int> piece_count;  // eligible decomposition of the QST tree; empty when k == 1
  int probes = 0;                  // distinct quotas sent to the QST backend
  int consistent_guesses = 0;      // guesses whose tree met the size bound
};

struct BcdsSolution {
  VertexSet vertices;
  int dominated = 0;
  Profit profit = 0;
  int opt_guess_used = 0;
  bool fallback = false;
  StageLog stage;
};

/// ceil(c * k).
int ceil_ck(const Rational& c, int k);

/// k + 2*ceil(c*k): vertex bound on a tree holding a good greedy prefix.
int bicriteria_size_bound(const Rational& c, int k);

/// ceil((1 - e^{-c}) * guess), with the product nudged one ulp downward first
/// so floating-point error can only lower the quota.
Profit quota_for_guess(const Rational& c, int guess);

/// (1 - e^{-c}) / (ceil(8c) + 4).
double bcds_ratio_bound(const Rational& c);

/// Greedy labelling, then for each guess of the optimum a quota Steiner tree
/// and a best-k subtree of it. Guesses are kept only when their tree respects
/// the bicriteria size bound (doubled for the heuristic backend); the kept
/// guess maximising the dominated count wins, ties to the smaller quota.
BcdsSolution solve_bcds(const Graph& g, int k, const BcdsConfig& cfg = {});

/// The QST tree for quota ceil((1 - e^{-c}) * opt), given the true optimum.
SteinerTree bicriteria_stage(const Graph& g, int k, const BcdsConfig& cfg, int opt);

struct RecurrenceReport {
  bool ok = true;
  int opt = 0;
  std::vector<Vertex> layer_picks;  // greedy picks inside the first three layers, in pick order
  std::vector<Profit> prefix;       // g_0, g_1, ...
  std::string transcript;
};

/// Replays the greedy pick order restricted to the layers around an optimal
/// solution and checks k*(g_{i+1} - g_i) >= opt - g_i together with
/// g_i >= (1 - (1 - 1/k)^i) * opt for every i <= ceil(c*k).
RecurrenceReport recurrence_check(const Graph& g, int k, const VertexSet& optimal, const Rational& c = Rational(1));

}  // namespace bcds
