#include "bcds/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bcds/errors.hpp"

namespace bcds {

namespace {

struct Layout {
  std::vector<int> elements;
  std::vector<std::vector<int>> sets;  // deduplicated copies
  int q = 0;
};

Layout prepare(const SetSystem& sys, std::optional<int> q) {
  sys.validate();
  if (sys.sets.empty()) throw InputError("empty set system");
  Layout out;
  const auto m = static_cast<int>(sys.sets.size());
  out.q = q.value_or(m * m);
  if (out.q < 1) throw InputError("multiplicity q must be at least 1");
  for (const auto& s : sys.sets) {
    std::vector<int> copy = s;
    std::sort(copy.begin(), copy.end());
    copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
    out.elements.insert(out.elements.end(), copy.begin(), copy.end());
    out.sets.push_back(std::move(copy));
  }
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()), out.elements.end());
  return out;
}

/// Appends element copies after `first_copy_id` and the set-to-copy edges.
void add_element_layer(const Layout& layout, int first_set_id, int first_copy_id, ReductionInstance& out,
                       EdgeSet& edges) {
  for (std::size_t j = 0; j < layout.elements.size(); ++j) {
    for (int z = 0; z < layout.q; ++z) {
      out.roles.push_back({VertexKind::element, -1, layout.elements[j], z});
    }
  }
  for (std::size_t i = 0; i < layout.sets.size(); ++i) {
    for (int x : layout.sets[i]) {
      const auto j = std::lower_bound(layout.elements.begin(), layout.elements.end(), x) - layout.elements.begin();
      for (int z = 0; z < layout.q; ++z) {
        const auto copy_id = static_cast<Vertex>(first_copy_id + j * layout.q + z);
        edges.push_back({static_cast<Vertex>(first_set_id + static_cast<int>(i)), copy_id});
      }
    }
  }
}

}  // namespace

ReductionInstance gen_mc_to_bcds(const SetSystem& sys, std::optional<int> q) {
  const Layout layout = prepare(sys, q);
  const auto m = static_cast<int>(layout.sets.size());
  ReductionInstance out;
  out.q = layout.q;
  out.elements = layout.elements;
  EdgeSet edges;
  for (int i = 0; i < m; ++i) {
    out.roles.push_back({VertexKind::set, i, -1, -1});
    for (int j = i + 1; j < m; ++j) edges.push_back({i, j});
  }
  add_element_layer(layout, 0, m, out, edges);
  out.graph = Graph::from_edges(static_cast<int>(out.roles.size()), edges);
  return out;
}

ReductionInstance gen_mc_to_bevd(const SetSystem& sys, std::optional<int> q) {
  const Layout layout = prepare(sys, q);
  const auto m = static_cast<int>(layout.sets.size());
  ReductionInstance out;
  out.q = layout.q;
  out.elements = layout.elements;
  EdgeSet edges;
  out.roles.push_back({VertexKind::root, -1, -1, -1});
  for (int i = 0; i < m; ++i) {
    out.roles.push_back({VertexKind::set, i, -1, -1});
    edges.push_back({0, i + 1});
  }
  add_element_layer(layout, 1, m + 1, out, edges);
  out.graph = Graph::from_edges(static_cast<int>(out.roles.size()), edges);
  return out;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

double unit_real(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace {

std::vector<Vertex> shuffled_ids(int n, std::mt19937_64& rng) {
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), Vertex{0});
  for (int i = n - 1; i > 0; --i) {
    std::swap(ids[static_cast<std::size_t>(i)], ids[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }
  return ids;
}

EdgeSet random_tree_edges(int n, std::mt19937_64& rng) {
  const auto ids = shuffled_ids(n, rng);
  EdgeSet edges;
  for (int v = 1; v < n; ++v) {
    const auto u = uniform_below(rng, static_cast<std::uint64_t>(v));
    edges.push_back(make_edge(ids[static_cast<std::size_t>(v)], ids[u]));
  }
  return edges;
}

}  // namespace

Graph gen_random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InputError("random graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  EdgeSet edges = random_tree_edges(n, rng);
  std::vector<char> present(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) present[static_cast<std::size_t>(e.u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(e.v)] = 1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (present[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]) continue;
      if (unit_real(rng) < p) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random tree needs n >= 1");
  std::mt19937_64 rng(seed);
  return Graph::from_edges(n, random_tree_edges(n, rng));
}

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::root: return "root";
    case VertexKind::set: return "set";
    case VertexKind::element: return "element";
  }
  return "unknown";
}

}  // namespace bcds
