#pragma once

#include <vector>

#include "bcds/graph.hpp"
#include "bcds/rational.hpp"

namespace bcds {

/// Output of the greedy dominating set: the set D, the order in which it was
/// built, and the profit each pick collected. Profits partition V, so
/// sum(profit) == n and profit[v] > 0 exactly for v in D.
struct ProfitLabeling {
  VertexSet dominating_set;
  std::vector<Vertex> pick_order;
  std::vector<Profit> profit;

  Profit profit_of(std::span<const Vertex> s) const;
};

/// Repeatedly picks the unpicked vertex whose closed neighbourhood covers the
/// most undominated vertices (ties to the smallest id) and charges it that
/// many. Requires a connected graph.
ProfitLabeling greedy_dominating_set(const Graph& g);

/// Universe 0..universe_size-1 and a list of (possibly overlapping) subsets.
struct SetSystem {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;

  /// Throws InputError on an element outside the universe.
  void validate() const;
  int union_size() const;
};

struct CoverResult {
  std::vector<int> chosen;  // set indices in pick order
  int covered = 0;
};

/// Max-k-cover greedy: k rounds of largest marginal gain, ties to the smallest
/// index, stopping early once no set adds anything.
CoverResult greedy_max_k_cover(const SetSystem& sys, int k);

/// Partial-cover greedy: largest marginal gain until at least `quota`
/// elements are covered. Throws InfeasibleError if the union is too small.
CoverResult greedy_partial_cover(const SetSystem& sys, int quota);

}  // namespace bcds
