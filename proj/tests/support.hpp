#pragma once

// Shared fixtures for the test binaries.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "restless/model.hpp"

namespace restless::testing {

// s=0, u=1, v=2, t=3.
inline PointTemporalGraph diamond_graph() {
  return PointTemporalGraph(4, {{0, 1, 1, 1}, {1, 2, 4, 2}, {1, 3, 5, 2}, {2, 3, 6, 1}, {1, 2, 7, 5}});
}

inline TemporalPath diamond_path() { return TemporalPath{{{0, 1, 1, 1}, {1, 2, 4, 2}, {2, 3, 6, 1}}}; }

struct RandomSpec {
  std::size_t min_nodes = 2;
  std::size_t max_nodes = 8;
  std::size_t max_arcs = 20;
  Time max_time = 12;
  Time max_delay = 3;
};

struct RandomCase {
  PointTemporalGraph graph;
  NodeId source = 0;
  Time delta = 0;
};

inline RandomCase random_case(std::mt19937_64& rng, const RandomSpec& spec) {
  auto pick = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  const std::size_t n = pick(spec.min_nodes, spec.max_nodes);
  const std::size_t m = pick(0, spec.max_arcs);
  const Time horizon = pick(0, spec.max_time);
  std::vector<TimedArc> arcs;
  for (std::size_t j = 0; j < m; ++j) {
    auto u = static_cast<NodeId>(pick(0, n - 1));
    auto v = static_cast<NodeId>(pick(0, n - 2));
    if (v >= u) ++v;
    arcs.push_back({u, v, pick(0, horizon), pick(1, spec.max_delay)});
  }
  RandomCase c;
  c.graph = PointTemporalGraph(n, std::move(arcs));
  c.source = static_cast<NodeId>(pick(0, n - 1));
  c.delta = pick(0, 3);
  return c;
}

// Calls fn(arcs) for every set of at most `max_arcs` distinct arcs drawn from
// `pool`, in lexicographic index order.
inline void for_each_arc_subset(const std::vector<TimedArc>& pool, std::size_t max_arcs,
                                const std::function<void(const std::vector<TimedArc>&)>& fn) {
  std::vector<TimedArc> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    fn(chosen);
    if (chosen.size() == max_arcs) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

// All arcs u != v on n nodes with tau + delta <= lifetime, delta in `delays`.
inline std::vector<TimedArc> arc_pool(std::size_t n, Time lifetime, const std::vector<Time>& delays) {
  std::vector<TimedArc> pool;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      for (Time d : delays) {
        for (Time tau = 0; tau + d <= lifetime; ++tau) pool.push_back({u, v, tau, d});
      }
    }
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

// True when the arc set is the lexicographically smallest among all
// relabelings that fix node 0. Arc sets must be sorted.
inline bool canonical_fixing_zero(const std::vector<TimedArc>& arcs, std::size_t n) {
  std::vector<NodeId> perm(n);
  for (NodeId i = 0; i < n; ++i) perm[i] = i;
  std::vector<TimedArc> mapped(arcs.size());
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      mapped[i] = {perm[arcs[i].u], perm[arcs[i].v], arcs[i].tau, arcs[i].delta};
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped < arcs) return false;
  }
  return true;
}

}  // namespace restless::testing
