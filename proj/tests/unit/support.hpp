#pragma once

// Small builders and reference implementations shared by the unit tests.
// The reference code is written independently of the library so that a
// shared bug cannot make both sides agree.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "bcds/graph.hpp"
#include "bcds/greedy.hpp"

namespace testing {

using bcds::Edge;
using bcds::Graph;
using bcds::Vertex;
using bcds::VertexSet;

inline Graph graph_of(int n, std::vector<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.push_back(bcds::make_edge(a, b));
  return Graph::from_edges(n, edges);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return graph_of(n, pairs);
}

/// Center 0, leaves 1..leaves.
inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return graph_of(leaves + 1, pairs);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return graph_of(n, pairs);
}

/// Naive N[S] straight from the edge list.
inline std::set<int> naive_closed(const Graph& g, const std::vector<int>& s) {
  std::set<int> out(s.begin(), s.end());
  for (const Edge& e : g.edges()) {
    if (std::find(s.begin(), s.end(), e.u) != s.end()) out.insert(e.v);
    if (std::find(s.begin(), s.end(), e.v) != s.end()) out.insert(e.u);
  }
  return out;
}

/// Alg. 1 replayed literally: full rescan every round, explicit sets.
struct ReferenceGds {
  std::vector<int> order;
  std::vector<std::int64_t> profit;
};

inline ReferenceGds reference_gds(const Graph& g) {
  const int n = g.num_vertices();
  ReferenceGds out;
  out.profit.assign(static_cast<std::size_t>(n), 0);
  std::set<int> undominated;
  for (int v = 0; v < n; ++v) undominated.insert(v);
  std::set<int> picked;
  while (!undominated.empty()) {
    int best = -1;
    int best_gain = -1;
    for (int v = 0; v < n; ++v) {
      if (picked.count(v)) continue;
      int gain = 0;
      for (int u : naive_closed(g, {v})) gain += static_cast<int>(undominated.count(u));
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    picked.insert(best);
    out.order.push_back(best);
    out.profit[static_cast<std::size_t>(best)] = best_gain;
    for (int u : naive_closed(g, {best})) undominated.erase(u);
  }
  return out;
}

inline int covered_by(const bcds::SetSystem& sys, const std::vector<int>& chosen) {
  std::set<int> all;
  for (int i : chosen) all.insert(sys.sets[static_cast<std::size_t>(i)].begin(), sys.sets[static_cast<std::size_t>(i)].end());
  return static_cast<int>(all.size());
}

/// Best coverage by at most k sets, by trying every index mask.
inline int brute_max_k_cover(const bcds::SetSystem& sys, int k) {
  const int m = static_cast<int>(sys.sets.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > k) continue;
    std::vector<int> chosen;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) chosen.push_back(i);
    best = std::max(best, covered_by(sys, chosen));
  }
  return best;
}

/// Fewest sets covering at least `quota` elements.
inline int brute_partial_cover(const bcds::SetSystem& sys, int quota) {
  const int m = static_cast<int>(sys.sets.size());
  int best = m + 1;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) >= best) continue;
    std::vector<int> chosen;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) chosen.push_back(i);
    if (covered_by(sys, chosen) >= quota) best = std::popcount(mask);
  }
  return best;
}

inline bcds::SetSystem random_set_system(std::mt19937_64& rng, int universe, int m) {
  bcds::SetSystem sys;
  sys.universe_size = universe;
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < m; ++i) {
    std::vector<int> s;
    for (int x = 0; x < universe; ++x)
      if (coin(rng) == 0) s.push_back(x);
    sys.sets.push_back(std::move(s));
  }
  return sys;
}

/// Plain DFS connectivity on an explicit edge list restricted to `keep`.
inline bool forest_is_single_tree(const std::set<int>& verts, const std::vector<Edge>& edges) {
  if (verts.empty()) return false;
  if (edges.size() + 1 != verts.size()) return false;
  std::set<int> seen{*verts.begin()};
  std::vector<int> stack{*verts.begin()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : edges) {
      int w = e.u == v ? e.v : (e.v == v ? e.u : -1);
      if (w >= 0 && seen.insert(w).second) stack.push_back(w);
    }
  }
  return seen == verts;
}

/// Literal eligibility: drop the edges inside `sub`, then isolated vertices;
/// what is left must be one tree (or nothing, when sub is the whole tree).
inline bool literally_eligible(const std::vector<Edge>& tree_edges, const VertexSet& sub) {
  std::set<int> in(sub.begin(), sub.end());
  std::vector<Edge> left;
  for (const Edge& e : tree_edges)
    if (!(in.count(e.u) && in.count(e.v))) left.push_back(e);
  std::set<int> verts;
  for (const Edge& e : left) {
    verts.insert(e.u);
    verts.insert(e.v);
  }
  if (left.empty()) return true;
  return forest_is_single_tree(verts, left);
}

}  // namespace testing
