#include "stepcomp/synthesis.hpp"

#include <set>
#include <stdexcept>

namespace stepcomp {

Digraph clone_vertex(const Digraph& d, Vertex u) {
  if (u < 0 || u >= d.vertex_count())
    throw std::out_of_range("clone_vertex: vertex out of range");
  std::vector<Arc> arcs = d.arcs();
  Vertex fresh = d.vertex_count();
  for (Vertex w : d.out_neighbors(u)) arcs.emplace_back(fresh, w);
  return Digraph(fresh + 1, std::move(arcs));
}

PartitionedDigraph grow(const PartitionedDigraph& from, const PartitionSpec& target) {
  const PartitionSpec& source = from.partition();
  if (target.part_count() != source.part_count())
    throw std::invalid_argument("grow: target has a different number of blocks");
  if (!target.dominates(source))
    throw std::invalid_argument("grow: target must be blockwise at least as large");

  int k = source.part_count();
  int n = target.vertex_count();

  // Seed vertices keep their offset within their block; block l starts at
  // target.block_begin(l) in the grown digraph.
  auto remap = [&](Vertex v) {
    int block = source.block_of(v);
    return target.block_begin(block) + (v - source.block_begin(block));
  };

  std::vector<std::set<Vertex>> out(n);
  std::vector<char> present(n, 0);
  for (const auto& [a, b] : from.digraph().arcs()) out[remap(a)].insert(remap(b));
  for (Vertex v = 0; v < source.vertex_count(); ++v) present[remap(v)] = 1;

  for (int block = 0; block < k; ++block) {
    Vertex representative = target.block_begin(block);
    for (int offset = source.size(block); offset < target.size(block); ++offset) {
      Vertex fresh = target.block_begin(block) + offset;
      // Copy the representative's out-neighborhood as it stands now; every
      // other cross-block edge at the new vertex points inward.
      std::vector<Vertex> cloned(out[representative].begin(), out[representative].end());
      for (Vertex w : cloned) out[fresh].insert(w);
      for (Vertex x = 0; x < n; ++x)
        if (present[x] && target.block_of(x) != block && !out[fresh].count(x))
          out[x].insert(fresh);
      present[fresh] = 1;
    }
  }

  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : out[v]) arcs.emplace_back(v, w);
  return PartitionedDigraph(Digraph(n, std::move(arcs)), target);
}

namespace {

Verdict orientable(const std::string& clause, SeedId seed, const PartitionSpec& target) {
  return Verdict{Orientability::Orientable, clause, GrowthPlan{seed, target}};
}

Verdict not_orientable(const std::string& clause) {
  return Verdict{Orientability::NotOrientable, clause, std::nullopt};
}

}  // namespace

Verdict decide(const PartitionSpec& p, StepPair steps) {
  StepPair s = steps.canonical();
  if (s.i == 1 && s.j == 1) return Verdict{Orientability::Unsupported, "", std::nullopt};

  int k = p.part_count();
  if (k == 2) {
    int n1 = p.size(0), n2 = p.size(1);
    if (s.total() == 3) {
      if (n2 >= 6) return orientable("A(a)(i)", SeedKind::D1, p);
      if (n1 >= 10 && n2 == 5) return orientable("A(a)(ii)", SeedKind::D2, p);
      return not_orientable("A(a)");
    }
    if (n2 >= 4) return orientable("A(b)", SeedKind::D3, p);
    if (s.i >= 2 && n1 >= 6 && n2 == 3) return orientable("A(c)", SeedKind::D4, p);
    return not_orientable("A");
  }
  if (k == 3) {
    int n1 = p.size(0), n2 = p.size(1), n3 = p.size(2);
    if (n3 >= 2) return orientable("B(a)", SeedKind::D5, p);
    if (n2 >= 3) return orientable("B(b)", SeedKind::D6, p);
    if (s.i >= 2 && n1 >= 4 && n2 == 2) return orientable("B(c)", SeedKind::D7, p);
    return not_orientable("B");
  }
  if (k == 4) {
    if (p.size(1) == 1 && p.size(0) >= 3) return orientable("C(a)(i)", SeedKind::D8, p);
    if (p.size(1) >= 2) return orientable("C(a)(ii)", SeedKind::D9, p);
    return not_orientable("C(a)");
  }
  return orientable("C(b)", SeedId::tournament(k), p);
}

ConstructResult construct(const PartitionSpec& p, StepPair steps) {
  Verdict verdict = decide(p, steps);
  if (verdict.outcome != Orientability::Orientable) return {std::move(verdict), std::nullopt};
  PartitionedDigraph grown = grow(seed(verdict.plan->seed), p);
  if (!is_competitive(grown.digraph(), steps))
    throw std::logic_error("constructed orientation failed verification for clause " +
                           verdict.clause + "; the seed table or growth step is broken");
  return {std::move(verdict), std::move(grown)};
}

}  // namespace stepcomp
