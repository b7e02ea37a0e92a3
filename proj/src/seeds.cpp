#include "stepcomp/seeds.hpp"

#include <array>
#include <stdexcept>

namespace stepcomp {

SeedId::SeedId(SeedKind kind_, int order_) : kind(kind_), order(order_) {
  if (kind == SeedKind::Tournament) {
    if (order < 5) throw std::invalid_argument("tournament seeds need at least 5 vertices");
  } else if (order != 0) {
    throw std::invalid_argument("only tournament seeds take an order");
  }
}

std::string SeedId::name() const {
  switch (kind) {
    case SeedKind::D1: return "D1";
    case SeedKind::D2: return "D2";
    case SeedKind::D3: return "D3";
    case SeedKind::D4: return "D4";
    case SeedKind::D5: return "D5";
    case SeedKind::D6: return "D6";
    case SeedKind::D7: return "D7";
    case SeedKind::D8: return "D8";
    case SeedKind::D9: return "D9";
    case SeedKind::D10: return "D10";
    case SeedKind::Tournament: return "T" + std::to_string(order);
  }
  return "?";
}

namespace {

PartitionedDigraph make(std::vector<int> sizes, std::vector<Arc> arcs) {
  PartitionSpec part(std::move(sizes));
  Digraph d(part.vertex_count(), std::move(arcs));
  return PartitionedDigraph(std::move(d), std::move(part));
}

// Orientation of K_{6,6}; vertices 0..5 on one side, 6..11 on the other,
// every vertex sending three arcs across and receiving three.
PartitionedDigraph seed_d1() {
  static const int out[12][3] = {
      {6, 8, 11}, {7, 8, 11}, {6, 7, 9}, {6, 7, 10}, {8, 9, 10}, {9, 10, 11},
      {1, 4, 5},  {0, 4, 5},  {2, 3, 5}, {0, 1, 3},  {0, 1, 2},  {2, 3, 4},
  };
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < 12; ++u)
    for (int t = 0; t < 3; ++t) arcs.emplace_back(u, out[u][t]);
  return make({6, 6}, std::move(arcs));
}

// Orientation of K_{10,5}: vertex u_l (0..9) beats exactly the l-th
// 3-element subset of the 5-vertex side (subsets in lexicographic order)
// and loses to the other two.
PartitionedDigraph seed_d2() {
  std::vector<std::array<int, 3>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (int c = b + 1; c < 5; ++c) subsets.push_back({a, b, c});
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < 10; ++u) {
    const auto& chosen = subsets[u];
    for (int t = 0; t < 5; ++t) {
      Vertex v = 10 + t;
      bool picked = t == chosen[0] || t == chosen[1] || t == chosen[2];
      arcs.emplace_back(picked ? Arc{u, v} : Arc{v, u});
    }
  }
  return make({10, 5}, std::move(arcs));
}

// Orientation of K_{4,4} with every out-degree 2: u_l beats v_l, v_{l+1};
// v_l beats u_{l+1}, u_{l+2} (indices mod 4, 4..7 being the v side).
PartitionedDigraph seed_d3() {
  std::vector<Arc> arcs;
  for (int l = 0; l < 4; ++l) {
    arcs.emplace_back(l, 4 + l);
    arcs.emplace_back(l, 4 + (l + 1) % 4);
    arcs.emplace_back(4 + l, (l + 1) % 4);
    arcs.emplace_back(4 + l, (l + 2) % 4);
  }
  return make({4, 4}, std::move(arcs));
}

// Orientation of K_{6,3}: the pair u_{2l}, u_{2l+1} beats v_l and v_{l+1}
// and loses to v_{l+2} (u indices mod 6, v indices mod 3, v side at 6..8).
PartitionedDigraph seed_d4() {
  std::vector<Arc> arcs;
  for (int l = 0; l < 3; ++l) {
    for (int s = 0; s < 2; ++s) {
      Vertex u = 2 * l + s;
      arcs.emplace_back(u, 6 + l);
      arcs.emplace_back(u, 6 + (l + 1) % 3);
      arcs.emplace_back(6 + (l + 2) % 3, u);
    }
  }
  return make({6, 3}, std::move(arcs));
}

PartitionedDigraph seed_d5() {
  // K_{2,2,2}, blocks {0,1} {2,3} {4,5}
  return make({2, 2, 2}, {{0, 2}, {2, 4}, {4, 0}, {3, 1}, {5, 3}, {1, 5},
                          {1, 4}, {3, 0}, {5, 2}, {0, 5}, {2, 1}, {4, 3}});
}

PartitionedDigraph seed_d6() {
  // K_{3,3,1}, blocks {0,1,2} {3,4,5} {6}
  return make({3, 3, 1}, {{2, 6}, {2, 4}, {1, 5}, {1, 6}, {0, 4}, {0, 3}, {5, 2}, {5, 0},
                          {4, 6}, {4, 1}, {3, 1}, {3, 2}, {6, 3}, {6, 5}, {6, 0}});
}

PartitionedDigraph seed_d7() {
  // K_{4,2,1}, blocks {0,1,2,3} {4,5} {6}
  return make({4, 2, 1}, {{0, 6}, {0, 5}, {1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 4},
                          {3, 6}, {4, 0}, {4, 1}, {5, 2}, {5, 3}, {6, 4}, {6, 5}});
}

PartitionedDigraph seed_d8() {
  // K_{3,1,1,1}, blocks {0,1,2} {3} {4} {5}
  return make({3, 1, 1, 1}, {{2, 3}, {2, 4}, {1, 4}, {1, 5}, {0, 3}, {0, 5},
                             {3, 1}, {3, 4}, {4, 0}, {4, 5}, {5, 3}, {5, 2}});
}

PartitionedDigraph seed_d9() {
  // K_{2,2,1,1}, blocks {0,1} {2,3} {4} {5}
  return make({2, 2, 1, 1}, {{1, 3}, {1, 4}, {0, 2}, {0, 5}, {2, 1}, {2, 5}, {3, 0},
                             {3, 4}, {4, 2}, {4, 5}, {4, 0}, {5, 1}, {5, 3}});
}

PartitionedDigraph seed_d10() {
  // Circulant tournament on 5 vertices: every vertex beats the next two.
  std::vector<Arc> arcs;
  for (int l = 0; l < 5; ++l) {
    arcs.emplace_back(l, (l + 1) % 5);
    arcs.emplace_back(l, (l + 2) % 5);
  }
  return make({1, 1, 1, 1, 1}, std::move(arcs));
}

// Tournament on k vertices with minimum out-degree 2: each vertex beats the
// next two cyclically, and every remaining pair is oriented high to low.
// T5 coincides with D10.
PartitionedDigraph seed_tournament(int k) {
  std::vector<Arc> arcs;
  for (Vertex l = 0; l < k; ++l)
    for (Vertex m = l + 1; m < k; ++m)
      arcs.emplace_back(m - l <= 2 ? Arc{l, m} : Arc{m, l});
  return make(std::vector<int>(k, 1), std::move(arcs));
}

}  // namespace

PartitionedDigraph seed(SeedId id) {
  switch (id.kind) {
    case SeedKind::D1: return seed_d1();
    case SeedKind::D2: return seed_d2();
    case SeedKind::D3: return seed_d3();
    case SeedKind::D4: return seed_d4();
    case SeedKind::D5: return seed_d5();
    case SeedKind::D6: return seed_d6();
    case SeedKind::D7: return seed_d7();
    case SeedKind::D8: return seed_d8();
    case SeedKind::D9: return seed_d9();
    case SeedKind::D10: return seed_d10();
    case SeedKind::Tournament: return seed_tournament(id.order);
  }
  throw std::logic_error("unknown seed");
}

}  // namespace stepcomp
