#include "bcds/tree.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "bcds/errors.hpp"

namespace bcds {

RootedTree RootedTree::from_edges(VertexSet labels, std::span<const Edge> edges, std::vector<Profit> profits) {
  RootedTree t;
  const std::size_t n = labels.size();
  t.labels_ = normalize(labels);
  if (t.labels_.size() != n) throw InputError("tree labels must be distinct");
  if (n == 0) throw InputError("tree must have at least one vertex");
  if (edges.size() + 1 != n) {
    throw InputError("a tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) + " edges, got " +
                     std::to_string(edges.size()));
  }
  if (profits.empty()) profits.assign(n, 0);
  if (profits.size() != n) throw InputError("tree profit vector has the wrong length");
  // Profits arrive in the caller's label order; re-sort alongside labels.
  {
    std::vector<std::pair<Vertex, Profit>> paired(n);
    for (std::size_t i = 0; i < n; ++i) paired[i] = {labels[i], profits[i]};
    std::sort(paired.begin(), paired.end());
    t.profit_.resize(n);
    for (std::size_t i = 0; i < n; ++i) t.profit_[i] = paired[i].second;
  }

  std::vector<std::vector<int>> adjacency(n);
  for (const Edge& e : edges) {
    int a = t.node_of(e.u);
    int b = t.node_of(e.v);
    if (a < 0 || b < 0) throw InputError("tree edge references an unknown vertex");
    if (a == b) throw InputError("tree edge is a self-loop");
    adjacency[static_cast<std::size_t>(a)].push_back(b);
    adjacency[static_cast<std::size_t>(b)].push_back(a);
  }

  t.parent_.assign(n, -2);
  t.children_.assign(n, {});
  t.subtree_size_.assign(n, 1);
  std::vector<int> order{0};
  t.parent_[0] = -1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    auto& adj = adjacency[static_cast<std::size_t>(v)];
    std::sort(adj.begin(), adj.end());
    for (int w : adj) {
      if (w == t.parent_[static_cast<std::size_t>(v)]) continue;
      if (t.parent_[static_cast<std::size_t>(w)] != -2) throw InputError("edges contain a cycle");
      t.parent_[static_cast<std::size_t>(w)] = v;
      t.children_[static_cast<std::size_t>(v)].push_back(w);
      order.push_back(w);
    }
  }
  if (order.size() != n) throw InputError("edges do not connect all tree vertices");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int parent = t.parent_[static_cast<std::size_t>(*it)];
    if (parent >= 0) t.subtree_size_[static_cast<std::size_t>(parent)] += t.subtree_size_[static_cast<std::size_t>(*it)];
  }
  return t;
}

RootedTree RootedTree::from_graph(const Graph& g, std::span<const Profit> profits) {
  VertexSet labels(static_cast<std::size_t>(g.num_vertices()));
  for (Vertex v = 0; v < g.num_vertices(); ++v) labels[static_cast<std::size_t>(v)] = v;
  return from_edges(std::move(labels), g.edges(), std::vector<Profit>(profits.begin(), profits.end()));
}

RootedTree RootedTree::from_steiner(const SteinerTree& t, std::span<const Profit> graph_profits) {
  std::vector<Profit> profits;
  profits.reserve(t.vertices.size());
  for (Vertex v : t.vertices) profits.push_back(graph_profits[static_cast<std::size_t>(v)]);
  return from_edges(t.vertices, t.edges, std::move(profits));
}

int RootedTree::node_of(Vertex label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

Profit RootedTree::total_profit() const {
  Profit total = 0;
  for (Profit p : profit_) total += p;
  return total;
}

EdgeSet RootedTree::edges() const {
  EdgeSet out;
  for (int v = 1; v < size(); ++v) out.push_back(make_edge(label(v), label(parent(v))));
  std::sort(out.begin(), out.end());
  return out;
}

RootedTree RootedTree::restrict_to(std::span<const Vertex> keep) const {
  VertexSet kept = normalize(VertexSet(keep.begin(), keep.end()));
  std::vector<char> in(labels_.size(), 0);
  std::vector<Profit> profits;
  for (Vertex v : kept) {
    int node = node_of(v);
    if (node < 0) throw InputError("restriction references a vertex outside the tree");
    in[static_cast<std::size_t>(node)] = 1;
    profits.push_back(profit(node));
  }
  EdgeSet sub;
  for (int v = 1; v < size(); ++v) {
    if (in[static_cast<std::size_t>(v)] && in[static_cast<std::size_t>(parent(v))]) {
      sub.push_back(make_edge(label(v), label(parent(v))));
    }
  }
  return from_edges(std::move(kept), sub, std::move(profits));
}

namespace {

void collect_subtree(const RootedTree& t, int node, VertexSet& out) {
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(t.label(v));
    for (int c : t.children(v)) stack.push_back(c);
  }
}

}  // namespace

EligibleSubtree find_eligible_subtree(const RootedTree& t, int p) {
  if (p < 1 || p > t.size()) {
    throw InputError("eligible subtree size p=" + std::to_string(p) + " outside [1, " + std::to_string(t.size()) + "]");
  }
  if (p == t.size()) return {t.label(0), t.labels()};

  int node = 0;
  for (bool descended = true; descended;) {
    descended = false;
    for (int c : t.children(node)) {
      if (t.subtree_size(c) >= p) {
        node = c;
        descended = true;
        break;
      }
    }
  }

  EligibleSubtree out{t.label(node), {t.label(node)}};
  std::vector<int> kids(t.children(node).begin(), t.children(node).end());
  if (kids.empty()) return out;
  std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) { return t.subtree_size(a) > t.subtree_size(b); });

  const int half = p / 2;
  if (t.subtree_size(kids.front()) >= half) {
    collect_subtree(t, kids.front(), out.vertices);
  } else {
    int taken = 1;
    for (int c : kids) {
      collect_subtree(t, c, out.vertices);
      taken += t.subtree_size(c);
      if (taken >= half + 1) break;
    }
  }
  out.vertices = normalize(std::move(out.vertices));
  return out;
}

Decomposition decompose_eligible(const RootedTree& t, int k) {
  if (k < 1) throw InputError("piece size k must be at least 1");
  Decomposition out;
  if (t.size() <= k) {
    out.pieces.push_back(t.labels());
    return out;
  }
  if (k < 2) throw InputError("a tree with edges cannot be split into single-vertex pieces");

  RootedTree rest = t;
  while (rest.size() > k) {
    EligibleSubtree cut = find_eligible_subtree(rest, k);
    VertexSet keep;
    std::set_difference(rest.labels().begin(), rest.labels().end(), cut.vertices.begin(), cut.vertices.end(),
                        std::back_inserter(keep));
    keep.push_back(cut.root);
    out.cut_roots.push_back(cut.root);
    out.pieces.push_back(std::move(cut.vertices));
    rest = rest.restrict_to(keep);
  }
  out.pieces.push_back(rest.labels());

  std::map<Vertex, int> seen;
  for (const auto& piece : out.pieces) {
    for (Vertex v : piece) ++seen[v];
  }
  for (auto [v, count] : seen) {
    if (count >= 2) out.replicated.push_back(v);
  }
  return out;
}

std::pair<VertexSet, VertexSet> split_folklore(const RootedTree& t) {
  const int n = t.size();
  if (n < 2) throw InputError("cannot split a tree with fewer than two vertices");

  // Centroid: every component of T - c has at most n/2 vertices.
  int centroid = -1;
  for (int v = 0; v < n && centroid < 0; ++v) {
    int largest = n - t.subtree_size(v);
    for (int c : t.children(v)) largest = std::max(largest, t.subtree_size(c));
    if (2 * largest <= n) centroid = v;
  }

  struct Branch {
    int size;
    int neighbor;
  };
  std::vector<Branch> branches;
  if (t.parent(centroid) >= 0) branches.push_back({n - t.subtree_size(centroid), t.parent(centroid)});
  for (int c : t.children(centroid)) branches.push_back({t.subtree_size(c), c});
  std::sort(branches.begin(), branches.end(), [](const Branch& a, const Branch& b) {
    return a.size != b.size ? a.size > b.size : a.neighbor < b.neighbor;
  });

  // Group A takes branches (largest first) until it holds >= (n-1)/3 vertices.
  std::vector<char> in_a(branches.size(), 0);
  int a_size = 0;
  for (std::size_t i = 0; i < branches.size() && 3 * a_size < n - 1; ++i) {
    in_a[i] = 1;
    a_size += branches[i].size;
  }

  auto gather = [&](int start, VertexSet& out) {
    std::vector<std::pair<int, int>> stack{{start, centroid}};
    while (!stack.empty()) {
      auto [v, from] = stack.back();
      stack.pop_back();
      out.push_back(t.label(v));
      if (t.parent(v) >= 0 && t.parent(v) != from) stack.push_back({t.parent(v), v});
      for (int c : t.children(v)) {
        if (c != from) stack.push_back({c, v});
      }
    }
  };
  VertexSet a{t.label(centroid)};
  VertexSet b{t.label(centroid)};
  for (std::size_t i = 0; i < branches.size(); ++i) gather(branches[i].neighbor, in_a[i] ? a : b);
  a = normalize(std::move(a));
  b = normalize(std::move(b));
  if (a.size() <= b.size()) return {std::move(a), std::move(b)};
  return {std::move(b), std::move(a)};
}

SteinerTree best_k_subtree(const RootedTree& t, int k) {
  if (k < 1) throw InputError("Best_k needs k >= 1");
  const int n = t.size();
  const int cap = std::min(k, n);
  constexpr Profit kUnreachable = std::numeric_limits<Profit>::min() / 4;

  // best[v][j]: max profit of a subtree topped at v with exactly j vertices,
  // all inside v's rooted subtree. share[v][i][j]: vertices given to the i-th
  // child when the first i+1 children are merged into budget j.
  std::vector<std::vector<Profit>> best(static_cast<std::size_t>(n));
  std::vector<std::vector<std::vector<int>>> share(static_cast<std::size_t>(n));

  std::vector<int> order{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int c : t.children(order[head])) order.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<Profit> cur{kUnreachable, t.profit(v)};
    auto& steps = share[static_cast<std::size_t>(v)];
    for (int c : t.children(v)) {
      const auto& child = best[static_cast<std::size_t>(c)];
      const int child_cap = static_cast<int>(child.size()) - 1;
      const int cur_cap = static_cast<int>(cur.size()) - 1;
      const int new_cap = std::min(cap, cur_cap + child_cap);
      std::vector<Profit> next(static_cast<std::size_t>(new_cap) + 1, kUnreachable);
      std::vector<int> pick(static_cast<std::size_t>(new_cap) + 1, 0);
      for (int j = 1; j <= new_cap; ++j) {
        for (int a = 0; a <= std::min(child_cap, j - 1); ++a) {
          if (j - a > cur_cap) continue;
          const Profit base = cur[static_cast<std::size_t>(j - a)];
          if (base == kUnreachable) continue;
          const Profit value = base + (a > 0 ? child[static_cast<std::size_t>(a)] : 0);
          if (value > next[static_cast<std::size_t>(j)]) {
            next[static_cast<std::size_t>(j)] = value;
            pick[static_cast<std::size_t>(j)] = a;
          }
        }
      }
      cur = std::move(next);
      steps.push_back(std::move(pick));
    }
    best[static_cast<std::size_t>(v)] = std::move(cur);
  }

  int top = 0;
  int top_size = 1;
  for (int v = 0; v < n; ++v) {
    const auto& row = best[static_cast<std::size_t>(v)];
    for (int j = 1; j < static_cast<int>(row.size()); ++j) {
      if (row[static_cast<std::size_t>(j)] > best[static_cast<std::size_t>(top)][static_cast<std::size_t>(top_size)]) {
        top = v;
        top_size = j;
      }
    }
  }

  SteinerTree out;
  out.total_profit = best[static_cast<std::size_t>(top)][static_cast<std::size_t>(top_size)];
  std::vector<std::pair<int, int>> stack{{top, top_size}};
  while (!stack.empty()) {
    auto [v, budget] = stack.back();
    stack.pop_back();
    out.vertices.push_back(t.label(v));
    const auto kids = t.children(v);
    const auto& steps = share[static_cast<std::size_t>(v)];
    for (int i = static_cast<int>(kids.size()) - 1; i >= 0; --i) {
      const int a = steps[static_cast<std::size_t>(i)][static_cast<std::size_t>(budget)];
      if (a > 0) {
        out.edges.push_back(make_edge(t.label(v), t.label(kids[static_cast<std::size_t>(i)])));
        stack.push_back({kids[static_cast<std::size_t>(i)], a});
      }
      budget -= a;
    }
  }
  out.vertices = normalize(std::move(out.vertices));
  out.edges = normalize(std::move(out.edges));
  return out;
}

}  // namespace bcds
