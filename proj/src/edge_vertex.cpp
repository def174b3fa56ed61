#include "bcds/edge_vertex.hpp"

#include <algorithm>
#include <string>

#include "bcds/errors.hpp"

namespace bcds {

SetSystem edge_neighborhood_system(const Graph& g) {
  SetSystem sys;
  sys.universe_size = g.num_vertices();
  sys.sets.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    const Vertex ends[] = {e.u, e.v};
    VertexSet cover = closed_neighborhood(g, ends);
    sys.sets.emplace_back(cover.begin(), cover.end());
  }
  return sys;
}

namespace {

EdgeSolution to_solution(const Graph& g, const CoverResult& cover) {
  EdgeSolution out;
  for (int index : cover.chosen) out.edges.push_back(g.edges()[static_cast<std::size_t>(index)]);
  out.edges = normalize(std::move(out.edges));
  out.dominated = static_cast<int>(edge_set_neighborhood(g, out.edges).size());
  return out;
}

}  // namespace

EdgeSolution solve_bevd(const Graph& g, int k) {
  if (k < 1) throw InputError("budget k must be at least 1");
  if (g.num_edges() == 0) return {};
  return to_solution(g, greedy_max_k_cover(edge_neighborhood_system(g), k));
}

EdgeSolution solve_pevd(const Graph& g, int quota) {
  if (quota < 1 || quota > g.num_vertices()) {
    throw InputError("quota " + std::to_string(quota) + " outside [1, " + std::to_string(g.num_vertices()) + "]");
  }
  return to_solution(g, greedy_partial_cover(edge_neighborhood_system(g), quota));
}

EdgeSet bcds_to_bevdc(const Graph& g, const VertexSet& s) {
  const VertexSet members = normalize(s);
  if (members.size() < 2) throw InputError("need at least two vertices to form an edge set");
  if (!is_connected_induced(g, members)) throw InputError("vertex set is not connected");
  return bfs_spanning_tree(g, members);
}

VertexSet bevdc_to_bcds(const Graph& g, const EdgeSet& es) {
  if (es.empty()) throw InputError("edge set is empty");
  for (const Edge& e : es) {
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
    }
  }
  // The endpoint graph must be connected using only edges from es.
  const EdgeSet edges = normalize(es);
  const VertexSet ends = endpoints(edges);
  std::vector<Edge> local;
  auto index_of = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(ends.begin(), ends.end(), v) - ends.begin());
  };
  for (const Edge& e : edges) local.push_back({index_of(e.u), index_of(e.v)});
  if (!Graph::from_edges(static_cast<int>(ends.size()), local).is_connected()) {
    throw InputError("edge set is not connected");
  }
  return ends;
}

}  // namespace bcds
