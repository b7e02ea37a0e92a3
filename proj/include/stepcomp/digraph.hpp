#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace stepcomp {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

// Directed graph on vertices 0..n-1 without loops, directed 2-cycles or
// multiple arcs. Immutable once constructed; operations build new values.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  // Throws std::invalid_argument on a loop, a duplicate arc, or a pair of
  // opposite arcs; std::out_of_range on an endpoint outside 0..n-1.
  Digraph(int n, std::vector<Arc> arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }  // sorted
  const std::vector<Vertex>& out_neighbors(Vertex v) const;
  const std::vector<Vertex>& in_neighbors(Vertex v) const;
  int out_degree(Vertex v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_neighbors(v).size()); }
  bool has_arc(Vertex u, Vertex v) const;

  bool operator==(const Digraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  void require_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

// Smallest out-degree over all vertices; 0 for the empty digraph.
int min_out_degree(const Digraph& d);

// Same index set with v isolated: every arc incident to v is dropped,
// all other vertex identities are unchanged.
Digraph delete_vertex(const Digraph& d, Vertex v);

// Shortest directed distances from source, truncated at depth `bound`.
// Entry w is empty when no directed path of at most `bound` arcs reaches w.
std::vector<std::optional<int>> bounded_distance(const Digraph& d, Vertex source, int bound);

}  // namespace stepcomp
