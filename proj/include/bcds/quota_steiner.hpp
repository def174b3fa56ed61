#pragma once

#include <span>

#include "bcds/graph.hpp"

namespace bcds {

/// Quota Steiner tree with unit edge costs: find a subtree whose vertex
/// profits sum to at least `quota` using as few edges as possible.
struct QstInstance {
  const Graph& graph;
  std::span<const Profit> profit;
  Profit quota = 0;
};

struct SteinerTree {
  VertexSet vertices;
  EdgeSet edges;
  Profit total_profit = 0;

  int edge_count() const { return static_cast<int>(edges.size()); }
  int size() const { return static_cast<int>(vertices.size()); }
};

/// True iff (vertices, edges) is a tree inside g and total_profit matches.
bool is_valid_steiner_tree(const Graph& g, std::span<const Profit> profit, const SteinerTree& t);

/// Exact backend: branch-and-bound over connected vertex sets, growing from
/// each root in turn with profit-based pruning. Returns a minimum-edge tree
/// meeting the quota; among optima, the lexicographically smallest vertex set.
/// quota <= 0 yields the single vertex 0.
SteinerTree qst_exact(const QstInstance& inst, int size_cap = 16);

/// Greedy backend without an approximation guarantee. Starts from the
/// highest-profit vertex and repeatedly attaches the shortest path whose new
/// vertices give the best profit per added edge until the quota is met.
SteinerTree qst_heuristic(const QstInstance& inst);

}  // namespace bcds
