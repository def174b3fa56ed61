#pragma once

#include "bcds/graph.hpp"
#include "bcds/greedy.hpp"

namespace bcds {

struct EdgeSolution {
  EdgeSet edges;
  int dominated = 0;
};

/// One set N[e] per edge, edges in canonical lexicographic order; the
/// universe is V.
SetSystem edge_neighborhood_system(const Graph& g);

/// Budgeted edge-vertex domination through greedy max-k-cover.
EdgeSolution solve_bevd(const Graph& g, int k);

/// Partial edge-vertex domination through greedy partial cover: few edges
/// whose neighbourhood reaches at least `quota` vertices.
EdgeSolution solve_pevd(const Graph& g, int quota);

/// Spanning tree (BFS from the smallest id) of a connected vertex set; the
/// result has |s| - 1 edges and the same closed neighbourhood as s.
EdgeSet bcds_to_bevdc(const Graph& g, const VertexSet& s);

/// Endpoints of a connected edge set; at most |es| + 1 vertices with the same
/// closed neighbourhood as es.
VertexSet bevdc_to_bcds(const Graph& g, const EdgeSet& es);

}  // namespace bcds
