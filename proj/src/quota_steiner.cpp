#include "bcds/quota_steiner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "bcds/errors.hpp"

namespace bcds {

bool is_valid_steiner_tree(const Graph& g, std::span<const Profit> profit, const SteinerTree& t) {
  if (t.vertices.empty() || t.vertices != normalize(t.vertices)) return false;
  if (t.edges.size() + 1 != t.vertices.size()) return false;
  Profit total = 0;
  for (Vertex v : t.vertices) {
    if (!g.contains(v)) return false;
    total += profit[static_cast<std::size_t>(v)];
  }
  if (total != t.total_profit) return false;

  // Union-find over positions in t.vertices; n-1 edges and no cycle means tree.
  std::vector<std::size_t> parent(t.vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto position = [&](Vertex v) -> std::ptrdiff_t {
    auto it = std::lower_bound(t.vertices.begin(), t.vertices.end(), v);
    if (it == t.vertices.end() || *it != v) return -1;
    return it - t.vertices.begin();
  };
  for (const Edge& e : t.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    auto a = position(e.u);
    auto b = position(e.v);
    if (a < 0 || b < 0) return false;
    auto ra = find(static_cast<std::size_t>(a));
    auto rb = find(static_cast<std::size_t>(b));
    if (ra == rb) return false;
    parent[ra] = rb;
  }
  return true;
}

namespace {

Profit checked_total(const Graph& g, std::span<const Profit> profit) {
  if (profit.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw InputError("profit vector has " + std::to_string(profit.size()) + " entries for " +
                     std::to_string(g.num_vertices()) + " vertices");
  }
  Profit total = 0;
  for (Profit p : profit) {
    if (p < 0) throw InputError("profits must be nonnegative");
    total += p;
  }
  return total;
}

SteinerTree single_vertex(std::span<const Profit> profit, Vertex v) {
  return SteinerTree{{v}, {}, profit[static_cast<std::size_t>(v)]};
}

SteinerTree finish(const Graph& g, std::span<const Profit> profit, VertexSet vertices) {
  SteinerTree t;
  t.vertices = normalize(std::move(vertices));
  t.edges = bfs_spanning_tree(g, t.vertices);
  for (Vertex v : t.vertices) t.total_profit += profit[static_cast<std::size_t>(v)];
  if (!is_valid_steiner_tree(g, profit, t)) throw std::logic_error("quota Steiner backend produced a non-tree");
  return t;
}

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << static_cast<unsigned>(v); }

/// Enumerates connected sets of an exact target size whose smallest vertex is
/// `root`, by include/exclude branching on the frontier.
class ConnectedSetSearch {
 public:
  ConnectedSetSearch(const Graph& g, std::span<const Profit> profit, Profit quota)
      : g_(g), profit_(profit), quota_(quota) {
    by_profit_.resize(static_cast<std::size_t>(g.num_vertices()));
    std::iota(by_profit_.begin(), by_profit_.end(), Vertex{0});
    std::stable_sort(by_profit_.begin(), by_profit_.end(), [&](Vertex a, Vertex b) {
      return profit_[static_cast<std::size_t>(a)] > profit_[static_cast<std::size_t>(b)];
    });
  }

  /// Lexicographically smallest feasible set of `size` vertices rooted at
  /// `root`, or 0 when none exists.
  Mask run(Vertex root, int size) {
    root_ = root;
    target_ = size;
    best_ = 0;
    allowed_ = ~Mask{0} << static_cast<unsigned>(root);
    if (g_.num_vertices() < 64) allowed_ &= (Mask{1} << static_cast<unsigned>(g_.num_vertices())) - 1;
    Mask frontier = 0;
    for (Vertex w : g_.neighbors(root)) {
      if (allowed_ & bit(w)) frontier |= bit(w);
    }
    grow(bit(root), profit_[static_cast<std::size_t>(root)], frontier, 0);
    return best_;
  }

 private:
  void grow(Mask set, Profit value, Mask frontier, Mask banned) {
    const int have = std::popcount(set);
    if (have == target_) {
      if (value >= quota_ && (best_ == 0 || lex_less(set, best_))) best_ = set;
      return;
    }
    if (frontier == 0) return;
    if (value + optimistic_extra(set | banned, target_ - have) < quota_) return;

    const auto v = static_cast<Vertex>(std::countr_zero(frontier));
    const Mask rest = frontier & ~bit(v);

    Mask grown = rest;
    for (Vertex w : g_.neighbors(v)) {
      const Mask b = bit(w);
      if ((allowed_ & b) && !(set & b) && !(banned & b)) grown |= b;
    }
    grow(set | bit(v), value + profit_[static_cast<std::size_t>(v)], grown, banned);
    grow(set, value, rest, banned | bit(v));
  }

  Profit optimistic_extra(Mask blocked, int slots) const {
    Profit extra = 0;
    for (Vertex v : by_profit_) {
      if (slots == 0) break;
      if (!(allowed_ & bit(v)) || (blocked & bit(v))) continue;
      extra += profit_[static_cast<std::size_t>(v)];
      --slots;
    }
    return extra;
  }

  static bool lex_less(Mask a, Mask b) {
    // Compare sorted member lists: the first differing vertex decides, and the
    // set that owns it is smaller.
    const Mask diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & -diff)) != 0;
  }

  const Graph& g_;
  std::span<const Profit> profit_;
  Profit quota_;
  std::vector<Vertex> by_profit_;
  Vertex root_ = 0;
  int target_ = 0;
  Mask allowed_ = 0;
  Mask best_ = 0;
};

}  // namespace

SteinerTree qst_exact(const QstInstance& inst, int size_cap) {
  const Graph& g = inst.graph;
  require_connected(g);
  const Profit total = checked_total(g, inst.profit);
  const int n = g.num_vertices();
  if (n > size_cap || n > 63) {
    throw CapacityError("exact quota Steiner backend is capped at " + std::to_string(std::min(size_cap, 63)) +
                        " vertices, instance has " + std::to_string(n));
  }
  if (inst.quota > total) {
    throw InfeasibleError("quota " + std::to_string(inst.quota) + " exceeds total profit " + std::to_string(total));
  }
  if (inst.quota <= 0) return single_vertex(inst.profit, 0);

  ConnectedSetSearch search(g, inst.profit, inst.quota);
  for (int size = 1; size <= n; ++size) {
    for (Vertex root = 0; root < n; ++root) {
      if (Mask found = search.run(root, size); found != 0) {
        VertexSet members;
        for (Vertex v = 0; v < n; ++v) {
          if (found & bit(v)) members.push_back(v);
        }
        return finish(g, inst.profit, std::move(members));
      }
    }
  }
  throw std::logic_error("connected graph admits no tree meeting a feasible quota");
}

SteinerTree qst_heuristic(const QstInstance& inst) {
  const Graph& g = inst.graph;
  require_connected(g);
  const Profit total = checked_total(g, inst.profit);
  if (inst.quota > total) {
    throw InfeasibleError("quota " + std::to_string(inst.quota) + " exceeds total profit " + std::to_string(total));
  }
  if (inst.quota <= 0) return single_vertex(inst.profit, 0);

  const auto n = static_cast<std::size_t>(g.num_vertices());
  auto p = [&](Vertex v) { return inst.profit[static_cast<std::size_t>(v)]; };

  Vertex start = 0;
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (p(v) > p(start)) start = v;
  }
  std::vector<char> in_tree(n, 0);
  in_tree[static_cast<std::size_t>(start)] = 1;
  SteinerTree t{{start}, {}, p(start)};

  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Profit> gain(n);
  while (t.total_profit < inst.quota) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<Vertex> frontier;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (in_tree[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = 0;
        gain[static_cast<std::size_t>(v)] = 0;
        frontier.push(v);
      }
    }
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : g.neighbors(v)) {
        auto wi = static_cast<std::size_t>(w);
        if (dist[wi] >= 0) continue;
        dist[wi] = dist[static_cast<std::size_t>(v)] + 1;
        parent[wi] = v;
        gain[wi] = gain[static_cast<std::size_t>(v)] + p(w);
        frontier.push(w);
      }
    }

    // Best gain/dist ratio, then shorter path, then smaller id.
    Vertex target = -1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (in_tree[vi] || gain[vi] <= 0) continue;
      if (target < 0) {
        target = v;
        continue;
      }
      auto ti = static_cast<std::size_t>(target);
      const Profit lhs = gain[vi] * dist[ti];
      const Profit rhs = gain[ti] * dist[vi];
      if (lhs > rhs || (lhs == rhs && dist[vi] < dist[ti])) target = v;
    }
    if (target < 0) throw std::logic_error("heuristic found no profitable vertex below a feasible quota");

    for (Vertex v = target; !in_tree[static_cast<std::size_t>(v)]; v = parent[static_cast<std::size_t>(v)]) {
      in_tree[static_cast<std::size_t>(v)] = 1;
      t.vertices.push_back(v);
      t.edges.push_back(make_edge(v, parent[static_cast<std::size_t>(v)]));
      t.total_profit += p(v);
    }
  }
  t.vertices = normalize(std::move(t.vertices));
  t.edges = normalize(std::move(t.edges));
  if (!is_valid_steiner_tree(g, inst.profit, t)) throw std::logic_error("heuristic produced a non-tree");
  return t;
}

}  // namespace bcds
