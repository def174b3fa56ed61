#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace bcds {

using Vertex = std::int32_t;
using Profit = std::int64_t;

/// Sorted, deduplicated list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeSet = std::vector<Edge>;

/// Builds the canonical form of (a, b). Throws InputError on a self-loop.
Edge make_edge(Vertex a, Vertex b);

/// Sorts and deduplicates in place, returning the argument for chaining.
VertexSet normalize(VertexSet s);
EdgeSet normalize(EdgeSet es);

/// Simple undirected graph on dense ids 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validates ids, rejects self-loops and duplicate edges.
  /// Connectivity is not required here; see require_connected().
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;

  /// Edges in canonical lexicographic order.
  const EdgeSet& edges() const { return edges_; }

  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  EdgeSet edges_;
};

/// Throws DisconnectedError unless g is connected and nonempty.
void require_connected(const Graph& g);

/// N[S] = S together with every vertex adjacent to S.
VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s);

/// V(E'), the endpoints of an edge set.
VertexSet endpoints(std::span<const Edge> es);

/// N[E'] = N[V(E')]. Every edge must belong to g.
VertexSet edge_set_neighborhood(const Graph& g, std::span<const Edge> es);

/// True iff the subgraph induced by s is connected. Throws on empty s.
bool is_connected_induced(const Graph& g, std::span<const Vertex> s);

/// BFS spanning tree of the subgraph induced by s, rooted at the smallest
/// member and visiting neighbours in ascending order. Requires s connected.
EdgeSet bfs_spanning_tree(const Graph& g, std::span<const Vertex> s);

}  // namespace bcds
