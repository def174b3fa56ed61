#include "bcds/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bcds/errors.hpp"

namespace bcds {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw InputError("self-loop on vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

VertexSet normalize(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

EdgeSet normalize(EdgeSet es) {
  for (auto& e : es) e = make_edge(e.u, e.v);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return es;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.adjacency_.resize(static_cast<std::size_t>(n));
  g.edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.u >= n || raw.v < 0 || raw.v >= n) {
      throw InputError("edge (" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                       ") references a vertex outside 0.." + std::to_string(n - 1));
    }
    g.edges_.push_back(make_edge(raw.u, raw.v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
  }
  for (const Edge& e : g.edges_) {
    g.adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_) best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  auto adj = neighbors(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool Graph::is_connected() const {
  const int n = num_vertices();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

void require_connected(const Graph& g) {
  if (g.num_vertices() == 0) throw InputError("graph has no vertices");
  if (!g.is_connected()) throw DisconnectedError("graph is not connected");
}

namespace {

void check_vertices(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (!g.contains(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
  }
}

}  // namespace

VertexSet closed_neighborhood(const Graph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  std::vector<char> mark(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : s) {
    mark[static_cast<std::size_t>(v)] = 1;
    for (Vertex w : g.neighbors(v)) mark[static_cast<std::size_t>(w)] = 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

VertexSet endpoints(std::span<const Edge> es) {
  VertexSet out;
  out.reserve(es.size() * 2);
  for (const Edge& e : es) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  return normalize(std::move(out));
}

VertexSet edge_set_neighborhood(const Graph& g, std::span<const Edge> es) {
  for (const Edge& e : es) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
    }
  }
  const VertexSet ends = endpoints(es);
  return closed_neighborhood(g, ends);
}

bool is_connected_induced(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InputError("connectivity of the empty set is undefined");
  check_vertices(g, s);
  std::vector<char> member(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : s) member[static_cast<std::size_t>(v)] = 1;
  const auto size = static_cast<std::size_t>(std::count(member.begin(), member.end(), 1));

  std::vector<Vertex> stack{s.front()};
  member[static_cast<std::size_t>(s.front())] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (member[static_cast<std::size_t>(w)] == 1) {
        member[static_cast<std::size_t>(w)] = 2;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == size;
}

EdgeSet bfs_spanning_tree(const Graph& g, std::span<const Vertex> s) {
  const VertexSet members = normalize(VertexSet(s.begin(), s.end()));
  if (members.empty()) return {};
  check_vertices(g, members);
  std::vector<char> state(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : members) state[static_cast<std::size_t>(v)] = 1;

  EdgeSet tree;
  std::queue<Vertex> frontier;
  frontier.push(members.front());
  state[static_cast<std::size_t>(members.front())] = 2;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (state[static_cast<std::size_t>(w)] == 1) {
        state[static_cast<std::size_t>(w)] = 2;
        tree.push_back(make_edge(v, w));
        frontier.push(w);
      }
    }
  }
  if (tree.size() + 1 != members.size()) throw InputError("vertex set does not induce a connected subgraph");
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace bcds
