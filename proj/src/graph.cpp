#include "stepcomp/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace stepcomp {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
  for (auto& [u, v] : edges) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge at " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

void Graph::require_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range 0.." +
                            std::to_string(n_ - 1));
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  require_vertex(v);
  return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  require_vertex(u);
  require_vertex(v);
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.arc_count());
  for (const auto& [u, v] : d.arcs()) edges.emplace_back(u, v);
  return Graph(d.vertex_count(), std::move(edges));
}

}  // namespace stepcomp
