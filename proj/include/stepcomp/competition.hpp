#pragma once

#include <optional>
#include <string>
#include <utility>

#include "stepcomp/digraph.hpp"
#include "stepcomp/graph.hpp"

namespace stepcomp {

// Step bounds (i, j), both at least 1.
struct StepPair {
  int i;
  int j;

  StepPair(int i_, int j_);
  StepPair canonical() const { return i <= j ? *this : StepPair(j, i); }
  int longer() const { return i > j ? i : j; }
  int total() const { return i + j; }

  bool operator==(const StepPair&) const = default;
};

// Certificate that u and v (i,j)-step compete: a vertex w reachable from u
// in len_from_u steps with v deleted and from v in len_from_v steps with u
// deleted. `swapped` is set when only the caps (j, i) fit the two lengths.
struct CompeteWitness {
  Vertex w;
  int len_from_u;
  int len_from_v;
  bool swapped;
};

// Least witness under (len_from_u + len_from_v, w), or nothing if u and v
// do not compete. Requires u != v.
std::optional<CompeteWitness> ij_compete(const Digraph& d, Vertex u, Vertex v, StepPair steps);

// Graph on V(d) whose edges are the competing pairs.
Graph competition_graph(const Digraph& d, StepPair steps);

// Lexicographically least pair that does not compete, or nothing when every
// pair does. Requires at least two vertices.
std::optional<std::pair<Vertex, Vertex>> first_noncompeting_pair(const Digraph& d, StepPair steps);

bool is_competitive(const Digraph& d, StepPair steps);

// Structural conditions every graph with a competitive orientation satisfies.
// Any failure certifies non-orientability; all passes certify nothing.
struct NecessaryReport {
  struct Condition {
    bool pass = true;
    std::string counterexample;  // empty iff pass
  };

  Condition min_degree;         // every vertex has degree >= 2
  Condition size_bounds;        // n >= 5 and m >= 2n
  Condition avoiding_walks;     // every pair linked by a short walk off edge uv
  Condition diameter;           // diameter <= i+j
  Condition edge_connectivity;  // 2-edge-connected

  bool all_pass() const {
    return min_degree.pass && size_bounds.pass && avoiding_walks.pass && diameter.pass &&
           edge_connectivity.pass;
  }
};

NecessaryReport check_necessary(const Graph& g, StepPair steps);

// Repeatedly removes the lowest-indexed vertex of degree exactly 2 and
// compacts the remaining indices. The result is orientable only if the
// input is, which makes this a sound preprocessing filter.
Graph reduce_degree_two(const Graph& g);

}  // namespace stepcomp
