#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bcds/graph.hpp"
#include "bcds/greedy.hpp"

namespace bcds {

enum class VertexKind { root, set, element };

/// What a vertex of a reduction graph stands for. `set_index` is the index
/// into the source set system; `element` is the original element id and
/// `copy` runs 0..q-1.
struct VertexRole {
  VertexKind kind = VertexKind::set;
  int set_index = -1;
  int element = -1;
  int copy = -1;
};

struct ReductionInstance {
  Graph graph;
  std::vector<VertexRole> roles;  // indexed by vertex id
  std::vector<int> elements;      // distinct elements appearing in some set, ascending
  int q = 0;
};

/// Max-coverage to BCDS: set vertices 0..m-1 form a clique, followed by q
/// copies of each covered element (element-major, then copy), each copy
/// joined to the sets containing its element.
ReductionInstance gen_mc_to_bcds(const SetSystem& sys, std::optional<int> q = std::nullopt);

/// Max-coverage to BEVD: root vertex 0 joined to set vertices 1..m, then the
/// element copies as above.
ReductionInstance gen_mc_to_bevd(const SetSystem& sys, std::optional<int> q = std::nullopt);

/// Uniform integer in [0, bound), by rejection; identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [0, 1) from the top 53 bits.
double unit_real(std::mt19937_64& rng);

/// Random spanning tree (each vertex attaches to a random earlier one under a
/// random relabelling), plus every remaining pair independently with
/// probability p. Deterministic in the seed.
Graph gen_random_connected(int n, double p, std::uint64_t seed);

/// Random labelled tree on n vertices.
Graph gen_random_tree(int n, std::uint64_t seed);

std::string to_string(VertexKind kind);

}  // namespace bcds
