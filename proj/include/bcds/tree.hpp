#pragma once

#include <span>
#include <utility>
#include <vector>

#include "bcds/graph.hpp"
#include "bcds/quota_steiner.hpp"

namespace bcds {

/// A tree over arbitrary vertex labels, oriented away from its smallest label.
/// Nodes are addressed by local index (the position of the label in the
/// sorted label list); children are kept in ascending label order.
class RootedTree {
 public:
  RootedTree() = default;

  /// Throws InputError unless (labels, edges) is a tree. Missing profits
  /// default to zero.
  static RootedTree from_edges(VertexSet labels, std::span<const Edge> edges, std::vector<Profit> profits = {});

  /// Treats a whole graph as a tree; `profits` is indexed by vertex id.
  static RootedTree from_graph(const Graph& g, std::span<const Profit> profits = {});

  /// Tree spanned by a Steiner tree, carrying the graph-wide profit labels.
  static RootedTree from_steiner(const SteinerTree& t, std::span<const Profit> graph_profits);

  int size() const { return static_cast<int>(labels_.size()); }
  const VertexSet& labels() const { return labels_; }
  Vertex label(int node) const { return labels_[static_cast<std::size_t>(node)]; }
  int node_of(Vertex label) const;

  int parent(int node) const { return parent_[static_cast<std::size_t>(node)]; }
  std::span<const int> children(int node) const { return children_[static_cast<std::size_t>(node)]; }
  int subtree_size(int node) const { return subtree_size_[static_cast<std::size_t>(node)]; }
  Profit profit(int node) const { return profit_[static_cast<std::size_t>(node)]; }
  Profit total_profit() const;

  /// Tree edges in label space, canonical order.
  EdgeSet edges() const;

  /// Induced subtree on a connected subset of labels, keeping profits.
  RootedTree restrict_to(std::span<const Vertex> keep) const;

 private:
  VertexSet labels_;
  std::vector<int> parent_;  // -1 for the root (node 0)
  std::vector<std::vector<int>> children_;
  std::vector<int> subtree_size_;
  std::vector<Profit> profit_;
};

struct EligibleSubtree {
  Vertex root = 0;
  VertexSet vertices;
};

/// Returns a rooted subtree T' with floor(p/2) <= |T'| <= p whose removal
/// (keeping its root) leaves a single tree. Descends to the first vertex
/// whose own subtree reaches p while all its children fall short, then takes
/// either its largest child subtree or an accumulation of children in
/// decreasing size. p == |T| returns the whole tree.
EligibleSubtree find_eligible_subtree(const RootedTree& t, int p);

struct Decomposition {
  std::vector<VertexSet> pieces;
  VertexSet replicated;           // vertices occurring in two or more pieces
  std::vector<Vertex> cut_roots;  // root of each removed eligible subtree, in order
};

/// Peels eligible subtrees with p = k until at most k vertices remain. Every
/// edge lands in exactly one piece. Needs k >= 2 unless the tree fits in k.
Decomposition decompose_eligible(const RootedTree& t, int k);

/// Splits a tree into two subtrees sharing one vertex, the smaller with at
/// most ceil(n/2) vertices and the larger with at most ceil(2n/3).
/// Returns {smaller, larger}.
std::pair<VertexSet, VertexSet> split_folklore(const RootedTree& t);

/// Maximum-profit connected subtree on at most k vertices (subtree knapsack).
/// Ties prefer the smallest top vertex, then the fewest vertices.
SteinerTree best_k_subtree(const RootedTree& t, int k);

}  // namespace bcds
