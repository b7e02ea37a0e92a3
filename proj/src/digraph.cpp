#include "stepcomp/digraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace stepcomp {

Digraph::Digraph(int n) : n_(n), out_(n), in_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : Digraph(n) {
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto [u, v] = arcs[k];
    require_vertex(u);
    require_vertex(v);
    if (u == v)
      throw std::invalid_argument("loop arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (k > 0 && arcs[k] == arcs[k - 1])
      throw std::invalid_argument("duplicate arc (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    if (std::binary_search(arcs.begin(), arcs.end(), Arc{v, u}))
      throw std::invalid_argument("directed 2-cycle between " + std::to_string(u) + " and " +
                                  std::to_string(v));
  }
  arcs_ = std::move(arcs);
  for (const auto& [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& nb : in_) std::sort(nb.begin(), nb.end());
  // out_ lists are already sorted because arcs_ is.
}

void Digraph::require_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range 0.." +
                            std::to_string(n_ - 1));
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
  require_vertex(v);
  return out_[v];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
  require_vertex(v);
  return in_[v];
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  require_vertex(u);
  require_vertex(v);
  const auto& nb = out_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int min_out_degree(const Digraph& d) {
  int best = 0;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    int deg = d.out_degree(v);
    if (v == 0 || deg < best) best = deg;
  }
  return best;
}

Digraph delete_vertex(const Digraph& d, Vertex v) {
  if (v < 0 || v >= d.vertex_count())
    throw std::out_of_range("delete_vertex: vertex " + std::to_string(v) + " out of range");
  std::vector<Arc> kept;
  kept.reserve(d.arc_count());
  for (const auto& a : d.arcs())
    if (a.first != v && a.second != v) kept.push_back(a);
  return Digraph(d.vertex_count(), std::move(kept));
}

std::vector<std::optional<int>> bounded_distance(const Digraph& d, Vertex source, int bound) {
  if (source < 0 || source >= d.vertex_count())
    throw std::out_of_range("bounded_distance: source out of range");
  if (bound < 0) throw std::invalid_argument("bounded_distance: bound must be non-negative");
  std::vector<std::optional<int>> dist(d.vertex_count());
  dist[source] = 0;
  std::queue<Vertex> queue;
  queue.push(source);
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop();
    int dx = *dist[x];
    if (dx == bound) continue;
    for (Vertex y : d.out_neighbors(x)) {
      if (dist[y]) continue;
      dist[y] = dx + 1;
      queue.push(y);
    }
  }
  return dist;
}

}  // namespace stepcomp
