#pragma once

#include <string>

#include "stepcomp/partition.hpp"

namespace stepcomp {

// The fixed orientations every construction grows from. D1..D10 are small
// hand-built digraphs; Tournament is the parameterized family Tk on k >= 5
// vertices, every vertex with at least two out-neighbors.
enum class SeedKind { D1, D2, D3, D4, D5, D6, D7, D8, D9, D10, Tournament };

struct SeedId {
  SeedKind kind;
  int order;  // tournament size; 0 for the fixed seeds

  SeedId(SeedKind kind_, int order_ = 0);
  static SeedId tournament(int k) { return SeedId(SeedKind::Tournament, k); }

  std::string name() const;  // "D1".."D10", "T5", "T6", ...

  bool operator==(const SeedId&) const = default;
};

// Seed digraphs and their partitions:
//   D1  K_{6,6}    D2  K_{10,5}   D3  K_{4,4}      D4  K_{6,3}
//   D5  K_{2,2,2}  D6  K_{3,3,1}  D7  K_{4,2,1}    D8  K_{3,1,1,1}
//   D9  K_{2,2,1,1}              D10 K_{1,1,1,1,1}
//   Tk  K_{1,...,1} on k vertices (T5 coincides with D10)
PartitionedDigraph seed(SeedId id);

}  // namespace stepcomp
