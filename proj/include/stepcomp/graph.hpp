#pragma once

#include <utility>
#include <vector>

#include "stepcomp/digraph.hpp"

namespace stepcomp {

using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

// Undirected graph without loops or multiple edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Edges may be given in either endpoint order; they are normalized.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void require_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Graph on the same vertex set with edge {u,v} for every arc (u,v).
// Since digraphs carry no 2-cycles, the edge count equals the arc count.
Graph underlying_graph(const Digraph& d);

}  // namespace stepcomp
