#pragma once

// Reference computations used only by the test suites. They intentionally
// take different routes than the library: reachability by iterating walk
// level sets instead of BFS, and shortest paths by exhaustive backtracking.

#include <set>
#include <vector>

#include "stepcomp/competition.hpp"
#include "stepcomp/digraph.hpp"

namespace testutil {

using stepcomp::Digraph;
using stepcomp::StepPair;
using stepcomp::Vertex;

// Vertices reachable from `from` by a directed walk of length 1..max_len
// that never touches `avoid`.
inline std::set<Vertex> walk_reachable(const Digraph& d, Vertex from, Vertex avoid, int max_len) {
  std::set<Vertex> reached;
  std::set<Vertex> layer{from};
  for (int len = 1; len <= max_len && !layer.empty(); ++len) {
    std::set<Vertex> next;
    for (Vertex x : layer)
      for (Vertex y : d.out_neighbors(x))
        if (y != avoid) next.insert(y);
    reached.insert(next.begin(), next.end());
    layer = std::move(next);
  }
  return reached;
}

// Walk-based reading of the competition predicate.
inline bool walk_compete(const Digraph& d, Vertex u, Vertex v, StepPair s) {
  auto meet = [&](const std::set<Vertex>& a, const std::set<Vertex>& b) {
    for (Vertex w : a)
      if (w != u && w != v && b.count(w)) return true;
    return false;
  };
  auto from_u_i = walk_reachable(d, u, v, s.i);
  auto from_u_j = walk_reachable(d, u, v, s.j);
  auto from_v_i = walk_reachable(d, v, u, s.i);
  auto from_v_j = walk_reachable(d, v, u, s.j);
  return meet(from_u_i, from_v_j) || meet(from_u_j, from_v_i);
}

// Exact shortest-path distances found by enumerating every simple path.
inline std::vector<int> exhaustive_distances(const Digraph& d, Vertex source) {
  std::vector<int> best(d.vertex_count(), -1);
  std::vector<char> used(d.vertex_count(), 0);
  best[source] = 0;
  used[source] = 1;
  auto dfs = [&](auto&& self, Vertex x, int len) -> void {
    for (Vertex y : d.out_neighbors(x)) {
      if (used[y]) continue;
      if (best[y] < 0 || len + 1 < best[y]) best[y] = len + 1;
      used[y] = 1;
      self(self, y, len + 1);
      used[y] = 0;
    }
  };
  dfs(dfs, source, 0);
  return best;
}

}  // namespace testutil
