#include "bcds/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bcds/errors.hpp"

namespace bcds {

Profit ProfitLabeling::profit_of(std::span<const Vertex> s) const {
  Profit total = 0;
  for (Vertex v : s) total += profit.at(static_cast<std::size_t>(v));
  return total;
}

ProfitLabeling greedy_dominating_set(const Graph& g) {
  require_connected(g);
  const auto n = static_cast<std::size_t>(g.num_vertices());

  // gain[v] = |N[v] ∩ U|, maintained incrementally as U shrinks.
  std::vector<int> gain(n);
  for (Vertex v = 0; v < g.num_vertices(); ++v) gain[static_cast<std::size_t>(v)] = g.degree(v) + 1;
  std::vector<char> undominated(n, 1);
  std::vector<char> picked(n, 0);

  ProfitLabeling out;
  out.profit.assign(n, 0);
  std::size_t remaining = n;
  while (remaining > 0) {
    Vertex best = -1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (picked[static_cast<std::size_t>(v)]) continue;
      if (best < 0 || gain[static_cast<std::size_t>(v)] > gain[static_cast<std::size_t>(best)]) best = v;
    }
    if (best < 0 || gain[static_cast<std::size_t>(best)] == 0) {
      throw std::logic_error("greedy dominating set stalled with undominated vertices");
    }
    const auto b = static_cast<std::size_t>(best);
    picked[b] = 1;
    out.profit[b] = gain[b];
    out.pick_order.push_back(best);

    auto absorb = [&](Vertex u) {
      if (!undominated[static_cast<std::size_t>(u)]) return;
      undominated[static_cast<std::size_t>(u)] = 0;
      --remaining;
      --gain[static_cast<std::size_t>(u)];
      for (Vertex w : g.neighbors(u)) --gain[static_cast<std::size_t>(w)];
    };
    absorb(best);
    for (Vertex w : g.neighbors(best)) absorb(w);
  }
  out.dominating_set = normalize(out.pick_order);
  return out;
}

void SetSystem::validate() const {
  if (universe_size < 0) throw InputError("negative universe size");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int x : sets[i]) {
      if (x < 0 || x >= universe_size) {
        throw InputError("set " + std::to_string(i) + " contains element " + std::to_string(x) +
                         " outside universe of size " + std::to_string(universe_size));
      }
    }
  }
}

int SetSystem::union_size() const {
  std::vector<char> seen(static_cast<std::size_t>(universe_size), 0);
  int count = 0;
  for (const auto& s : sets) {
    for (int x : s) {
      if (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        ++count;
      }
    }
  }
  return count;
}

namespace {

class CoverState {
 public:
  explicit CoverState(const SetSystem& sys)
      : covered_flag_(static_cast<std::size_t>(sys.universe_size), 0), used_(sys.sets.size(), 0) {
    // Sets may list an element twice; count it once.
    sets_.reserve(sys.sets.size());
    for (const auto& s : sys.sets) {
      std::vector<int> copy = s;
      std::sort(copy.begin(), copy.end());
      copy.erase(std::unique(copy.begin(), copy.end()), copy.end());
      sets_.push_back(std::move(copy));
    }
  }

  int gain(std::size_t i) const {
    int g = 0;
    for (int x : sets_[i]) g += covered_flag_[static_cast<std::size_t>(x)] ? 0 : 1;
    return g;
  }

  /// Largest marginal gain among unused sets, smallest index on ties.
  /// Returns {-1, 0} when nothing adds coverage.
  std::pair<int, int> best() const {
    int best_index = -1;
    int best_gain = 0;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      if (used_[i]) continue;
      int g = gain(i);
      if (g > best_gain) {
        best_gain = g;
        best_index = static_cast<int>(i);
      }
    }
    return {best_index, best_gain};
  }

  void take(int index, CoverResult& out) {
    used_[static_cast<std::size_t>(index)] = 1;
    for (int x : sets_[static_cast<std::size_t>(index)]) {
      if (!covered_flag_[static_cast<std::size_t>(x)]) {
        covered_flag_[static_cast<std::size_t>(x)] = 1;
        ++out.covered;
      }
    }
    out.chosen.push_back(index);
  }

 private:
  std::vector<std::vector<int>> sets_;
  std::vector<char> covered_flag_;
  std::vector<char> used_;
};

}  // namespace

CoverResult greedy_max_k_cover(const SetSystem& sys, int k) {
  sys.validate();
  if (sys.sets.empty()) throw InputError("empty set system");
  if (k < 1) throw InputError("budget k must be at least 1");
  CoverState state(sys);
  CoverResult out;
  for (int round = 0; round < k; ++round) {
    auto [index, gain] = state.best();
    if (index < 0) break;
    state.take(index, out);
  }
  return out;
}

CoverResult greedy_partial_cover(const SetSystem& sys, int quota) {
  sys.validate();
  if (quota < 0) throw InputError("negative quota");
  const int reachable = sys.union_size();
  if (quota > reachable) {
    throw InfeasibleError("quota " + std::to_string(quota) + " exceeds the " + std::to_string(reachable) +
                          " coverable elements");
  }
  CoverState state(sys);
  CoverResult out;
  while (out.covered < quota) {
    auto [index, gain] = state.best();
    state.take(index, out);
  }
  return out;
}

}  // namespace bcds
