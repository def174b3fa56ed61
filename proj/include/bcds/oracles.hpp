#pragma once

#include <cstdint>
#include <span>

#include "bcds/graph.hpp"
#include "bcds/tree.hpp"

namespace bcds {

/// Exhaustive ground truth. These routines deliberately avoid the solver
/// code paths (no shared enumeration, no greedy, no DP) so that agreement
/// between the two is evidence rather than tautology.
struct OracleLimits {
  int max_vertices = 16;
  std::int64_t max_enumeration = 20'000'000;
};

struct OracleResult {
  std::int64_t optimum_value = 0;
  VertexSet witness_vertices;
  EdgeSet witness_edges;
  std::int64_t enumerated_count = 0;
};

/// max |N[S]| over connected S with |S| <= k.
OracleResult oracle_bcds(const Graph& g, int k, const OracleLimits& limits = {});

/// max |N[E']| over all edge sets with |E'| <= k.
OracleResult oracle_bevd(const Graph& g, int k, const OracleLimits& limits = {});

/// min |E'| with |N[E']| >= quota.
OracleResult oracle_pevd(const Graph& g, int quota, const OracleLimits& limits = {});

/// Minimum edge count of a subtree whose profit reaches `quota`, by scanning
/// every vertex subset. Default cap: 10 vertices.
OracleResult oracle_qst(const Graph& g, std::span<const Profit> profit, Profit quota,
                        const OracleLimits& limits = {10, 20'000'000});

/// Max profit of a connected subset of at most k tree vertices, by scanning
/// every subset. Default cap: 14 vertices.
OracleResult oracle_best_k(const RootedTree& t, int k, const OracleLimits& limits = {14, 20'000'000});

}  // namespace bcds
