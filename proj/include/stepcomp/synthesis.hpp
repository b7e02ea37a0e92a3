#pragma once

#include <optional>
#include <string>

#include "stepcomp/competition.hpp"
#include "stepcomp/seeds.hpp"

namespace stepcomp {

// d plus one vertex whose out-arcs copy the out-neighborhood of u; the new
// vertex gets index vertex_count() and no in-arcs. Competitiveness of d is
// preserved by this extension.
Digraph clone_vertex(const Digraph& d, Vertex u);

// Extends an orientation of a complete multipartite graph to one of the
// larger graph `target` (same arity, blockwise at least as large). Each new
// vertex copies the current out-neighborhood of its block's first vertex and
// receives every remaining cross-block edge inward, which preserves
// competitiveness of the input.
PartitionedDigraph grow(const PartitionedDigraph& from, const PartitionSpec& target);

enum class Orientability { Orientable, NotOrientable, Unsupported };

struct GrowthPlan {
  SeedId seed;
  PartitionSpec target;
};

// Decision outcome. `clause` tags the case of the characterization that
// fired (A: bipartite, B: tripartite, C: four or more blocks), e.g.
// "A(a)(ii)" or "B(c)". Orientable verdicts carry the growth plan that
// construct() realizes; Unsupported is returned exactly for steps (1,1).
struct Verdict {
  Orientability outcome;
  std::string clause;
  std::optional<GrowthPlan> plan;
};

Verdict decide(const PartitionSpec& p, StepPair steps);

struct ConstructResult {
  Verdict verdict;
  std::optional<PartitionedDigraph> digraph;
};

// Builds a competitive orientation of the complete multipartite graph for p
// whenever decide() says one exists. The result is re-verified with
// is_competitive before being returned; a verification failure throws
// std::logic_error since it would mean a broken seed table or growth step.
ConstructResult construct(const PartitionSpec& p, StepPair steps);

}  // namespace stepcomp
