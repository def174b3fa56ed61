#include "bcds/oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "bcds/errors.hpp"

namespace bcds {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << static_cast<unsigned>(v); }

/// Closed-neighbourhood bitmask of every vertex, built straight from the edge
/// list rather than through the graph helpers.
std::vector<Mask> closed_masks(const Graph& g) {
  std::vector<Mask> out(static_cast<std::size_t>(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v) out[static_cast<std::size_t>(v)] = bit(v);
  for (const Edge& e : g.edges()) {
    out[static_cast<std::size_t>(e.u)] |= bit(e.v);
    out[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
  return out;
}

VertexSet members(Mask m) {
  VertexSet out;
  for (int v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return out;
}

void check_vertex_cap(int n, int cap, const char* what) {
  if (n > cap || n > 64) {
    throw CapacityError(std::string(what) + " oracle is capped at " + std::to_string(std::min(cap, 64)) +
                        " vertices, instance has " + std::to_string(n));
  }
}

/// Number of subsets of size 1..k drawn from m items, saturating at limit+1.
std::int64_t subsets_up_to(int m, int k, std::int64_t limit) {
  std::int64_t total = 0;
  std::int64_t binom = 1;  // C(m, s)
  for (int s = 1; s <= k && s <= m; ++s) {
    binom = binom * (m - s + 1) / s;
    total += binom;
    if (binom > limit || total > limit) return limit + 1;
  }
  return total;
}

bool mask_connected(Mask set, const std::vector<Mask>& closed) {
  if (set == 0) return false;
  Mask reached = set & (~set + 1);
  for (Mask grown = 0; grown != reached;) {
    grown = reached;
    for (Mask rest = reached; rest != 0; rest &= rest - 1) {
      reached |= closed[static_cast<std::size_t>(std::countr_zero(rest))] & set;
    }
  }
  return reached == set;
}

/// Visits every combination of `size` indices out of [0, m) in lexicographic
/// order until `visit` returns true.
template <class Visit>
bool for_each_combination(int m, int size, Visit&& visit) {
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(pick)) return true;
    int i = size - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - size + i) --i;
    if (i < 0) return false;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j) - 1] + 1;
  }
}

}  // namespace

OracleResult oracle_bcds(const Graph& g, int k, const OracleLimits& limits) {
  const int n = g.num_vertices();
  check_vertex_cap(n, limits.max_vertices, "BCDS");
  if (k < 1) throw InputError("budget k must be at least 1");
  if (n == 0) throw InputError("graph has no vertices");
  const auto closed = closed_masks(g);

  OracleResult out;
  Mask best_set = 0;
  int best_value = -1;
  std::unordered_set<Mask> seen;
  for (int root = 0; root < n; ++root) {
    const Mask allowed = ~(bit(root) - 1);  // vertices >= root
    std::vector<Mask> stack{bit(root)};
    seen.clear();
    seen.insert(bit(root));
    while (!stack.empty()) {
      const Mask set = stack.back();
      stack.pop_back();
      if (++out.enumerated_count > limits.max_enumeration) throw CapacityError("BCDS oracle enumeration cap exceeded");
      Mask dominated = 0;
      for (Mask rest = set; rest != 0; rest &= rest - 1) dominated |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
      const int value = std::popcount(dominated);
      if (value > best_value) {
        best_value = value;
        best_set = set;
      }
      if (std::popcount(set) >= k) continue;
      Mask extend = 0;
      for (Mask rest = set; rest != 0; rest &= rest - 1) extend |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
      extend &= allowed & ~set;
      for (; extend != 0; extend &= extend - 1) {
        const Mask next = set | (extend & (~extend + 1));
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
  }
  out.optimum_value = best_value;
  out.witness_vertices = members(best_set);
  return out;
}

OracleResult oracle_bevd(const Graph& g, int k, const OracleLimits& limits) {
  const int n = g.num_vertices();
  check_vertex_cap(n, 64, "BEVD");
  if (k < 1) throw InputError("budget k must be at least 1");
  const int m = g.num_edges();
  if (subsets_up_to(m, k, limits.max_enumeration) > limits.max_enumeration) {
    throw CapacityError("BEVD oracle would enumerate more than " + std::to_string(limits.max_enumeration) + " edge sets");
  }
  const auto closed = closed_masks(g);
  std::vector<Mask> edge_cover;
  for (const Edge& e : g.edges()) edge_cover.push_back(closed[static_cast<std::size_t>(e.u)] | closed[static_cast<std::size_t>(e.v)]);

  OracleResult out;
  std::vector<int> best_pick;
  for (int size = 1; size <= std::min(k, m); ++size) {
    for_each_combination(m, size, [&](const std::vector<int>& pick) {
      ++out.enumerated_count;
      Mask dominated = 0;
      for (int i : pick) dominated |= edge_cover[static_cast<std::size_t>(i)];
      if (std::popcount(dominated) > out.optimum_value) {
        out.optimum_value = std::popcount(dominated);
        best_pick = pick;
      }
      return false;
    });
  }
  for (int i : best_pick) out.witness_edges.push_back(g.edges()[static_cast<std::size_t>(i)]);
  return out;
}

OracleResult oracle_pevd(const Graph& g, int quota, const OracleLimits& limits) {
  const int n = g.num_vertices();
  check_vertex_cap(n, 64, "PEVD");
  OracleResult out;
  if (quota <= 0) return out;
  const auto closed = closed_masks(g);
  std::vector<Mask> edge_cover;
  Mask everything = 0;
  for (const Edge& e : g.edges()) {
    edge_cover.push_back(closed[static_cast<std::size_t>(e.u)] | closed[static_cast<std::size_t>(e.v)]);
    everything |= edge_cover.back();
  }
  if (std::popcount(everything) < quota) {
    throw InfeasibleError("no edge set dominates " + std::to_string(quota) + " vertices");
  }

  const int m = g.num_edges();
  for (int size = 1; size <= m; ++size) {
    if (subsets_up_to(m, size, limits.max_enumeration) > limits.max_enumeration) {
      throw CapacityError("PEVD oracle enumeration cap exceeded at size " + std::to_string(size));
    }
    std::vector<int> hit;
    const bool found = for_each_combination(m, size, [&](const std::vector<int>& pick) {
      ++out.enumerated_count;
      Mask dominated = 0;
      for (int i : pick) dominated |= edge_cover[static_cast<std::size_t>(i)];
      if (std::popcount(dominated) >= quota) {
        hit = pick;
        return true;
      }
      return false;
    });
    if (found) {
      out.optimum_value = size;
      for (int i : hit) out.witness_edges.push_back(g.edges()[static_cast<std::size_t>(i)]);
      return out;
    }
  }
  throw std::logic_error("PEVD oracle exhausted a feasible instance");
}

OracleResult oracle_qst(const Graph& g, std::span<const Profit> profit, Profit quota, const OracleLimits& limits) {
  const int n = g.num_vertices();
  check_vertex_cap(n, std::min(limits.max_vertices, 30), "QST");
  if (profit.size() != static_cast<std::size_t>(n)) throw InputError("profit vector has the wrong length");
  if (n == 0) throw InputError("graph has no vertices");
  Profit total = 0;
  for (Profit p : profit) total += p;
  if (quota > total) throw InfeasibleError("quota exceeds total profit");

  OracleResult out;
  if (quota <= 0) {
    out.witness_vertices = {0};
    out.enumerated_count = 1;
    return out;
  }
  const auto closed = closed_masks(g);
  int best_size = n + 1;
  VertexSet best;
  for (Mask set = 1; set < bit(n); ++set) {
    ++out.enumerated_count;
    const int size = std::popcount(set);
    if (size > best_size) continue;
    Profit value = 0;
    for (Vertex v : members(set)) value += profit[static_cast<std::size_t>(v)];
    if (value < quota || !mask_connected(set, closed)) continue;
    VertexSet candidate = members(set);
    if (size < best_size || candidate < best) {
      best_size = size;
      best = std::move(candidate);
    }
  }
  if (best.empty()) throw InfeasibleError("no connected vertex set reaches the quota");
  out.optimum_value = best_size - 1;
  out.witness_vertices = std::move(best);
  return out;
}

OracleResult oracle_best_k(const RootedTree& t, int k, const OracleLimits& limits) {
  const int n = t.size();
  check_vertex_cap(n, std::min(limits.max_vertices, 30), "Best_k");
  if (k < 1) throw InputError("budget k must be at least 1");

  // Local adjacency from the labelled edge list.
  std::vector<Mask> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = bit(v);
  for (const Edge& e : t.edges()) {
    const int a = t.node_of(e.u);
    const int b = t.node_of(e.v);
    closed[static_cast<std::size_t>(a)] |= bit(b);
    closed[static_cast<std::size_t>(b)] |= bit(a);
  }

  OracleResult out;
  out.optimum_value = -1;
  Mask best_set = 0;
  for (Mask set = 1; set < bit(n); ++set) {
    if (std::popcount(set) > k) continue;
    ++out.enumerated_count;
    if (!mask_connected(set, closed)) continue;
    Profit value = 0;
    for (Vertex v : members(set)) value += t.profit(v);
    if (value > out.optimum_value) {
      out.optimum_value = value;
      best_set = set;
    }
  }
  for (Vertex v : members(best_set)) out.witness_vertices.push_back(t.label(v));
  return out;
}

}  // namespace bcds
