#include "stepcomp/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stepcomp {

namespace {

void require_enumerable(const Graph& g, int edge_cap) {
  if (g.edge_count() > edge_cap)
    throw std::runtime_error("graph has " + std::to_string(g.edge_count()) +
                             " edges, above the enumeration cap of " + std::to_string(edge_cap) +
                             "; raise the cap (--cap) to enumerate anyway");
  if (g.edge_count() > 62) throw std::runtime_error("mask space limited to 62 edges");
  if (g.vertex_count() > 62)
    throw std::runtime_error("orientation scan limited to 62 vertices");
}

// Vertices reachable from `from` with vertex `avoid` removed: one bitset for
// walks of length <= i and one for <= j (i <= j). Neither contains `from`.
struct ReachSets {
  std::uint64_t within_i;
  std::uint64_t within_j;
};

ReachSets reach_sets(const std::uint64_t* adj, Vertex from, Vertex avoid, int i, int j) {
  const std::uint64_t allowed = ~(1ull << avoid);
  std::uint64_t visited = 1ull << from;
  std::uint64_t frontier = visited;
  std::uint64_t reached = 0;
  std::uint64_t at_i = 0;
  int level = 1;
  for (; level <= j; ++level) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & allowed & ~visited;
    visited |= frontier;
    reached |= frontier;
    if (level == i) at_i = reached;
    if (!frontier) break;
  }
  if (i >= level) at_i = reached;  // the sets stopped growing early
  return {at_i, reached};
}

bool pair_competes_bitset(const std::uint64_t* adj, Vertex u, Vertex v, int i, int j) {
  ReachSets from_u = reach_sets(adj, u, v, i, j);
  ReachSets from_v = reach_sets(adj, v, u, i, j);
  return ((from_u.within_i & from_v.within_j) | (from_u.within_j & from_v.within_i)) != 0;
}

bool competitive_bitset(const std::uint64_t* adj, int n, int i, int j) {
  // A vertex with fewer than two out-neighbors never competes with everyone.
  for (Vertex v = 0; v < n; ++v)
    if (std::popcount(adj[v]) < 2) return false;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!pair_competes_bitset(adj, u, v, i, j)) return false;
  return true;
}

// Rebuilds per-mask bitset adjacency for orientations of a fixed base graph.
class MaskChecker {
 public:
  MaskChecker(const Graph& g, StepPair steps)
      : n_(g.vertex_count()), edges_(g.edges()), adj_(g.vertex_count(), 0) {
    if (n_ > 62) throw std::invalid_argument("bitset kernel limited to 62 vertices");
    StepPair s = steps.canonical();
    i_ = s.i;
    j_ = s.j;
  }

  bool competitive(std::uint64_t mask) {
    std::fill(adj_.begin(), adj_.end(), 0);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& [u, v] = edges_[e];
      if (mask >> e & 1)
        adj_[v] |= 1ull << u;
      else
        adj_[u] |= 1ull << v;
    }
    return competitive_bitset(adj_.data(), n_, i_, j_);
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
  int i_, j_;
};

void atomic_min(std::atomic<std::uint64_t>& target, std::uint64_t value) {
  std::uint64_t seen = target.load(std::memory_order_relaxed);
  while (value < seen && !target.compare_exchange_weak(seen, value)) {
  }
}

constexpr std::uint64_t kNoWitness = ~0ull;

}  // namespace

Digraph orient(const Graph& g, std::uint64_t mask) {
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto& [u, v] = edges[e];
    arcs.emplace_back(mask >> e & 1 ? Arc{v, u} : Arc{u, v});
  }
  return Digraph(g.vertex_count(), std::move(arcs));
}

std::uint64_t orientation_count(const Graph& g) {
  if (g.edge_count() > 62) throw std::runtime_error("mask space limited to 62 edges");
  return 1ull << g.edge_count();
}

OrientationCursor::OrientationCursor(Graph base, int edge_cap)
    : OrientationCursor(std::move(base), 0, 0, edge_cap) {
  end_ = orientation_count(base_);
}

OrientationCursor::OrientationCursor(Graph base, std::uint64_t begin, std::uint64_t end,
                                     int edge_cap)
    : base_(std::move(base)), mask_(begin), end_(end) {
  require_enumerable(base_, edge_cap);
}

bool is_competitive_bitset(const Digraph& d, StepPair steps) {
  int n = d.vertex_count();
  if (n < 2) throw std::invalid_argument("competitiveness needs at least two vertices");
  if (n > 62) throw std::invalid_argument("bitset kernel limited to 62 vertices");
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& [u, v] : d.arcs()) adj[u] |= 1ull << v;
  StepPair s = steps.canonical();
  return competitive_bitset(adj.data(), n, s.i, s.j);
}

ScanResult scan_orientations_reference(const Graph& g, StepPair steps, bool count_all) {
  ScanResult result;
  std::uint64_t total = orientation_count(g);
  std::uint64_t witness = kNoWitness;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!is_competitive(orient(g, mask), steps)) continue;
    if (witness == kNoWitness) witness = mask;
    ++result.competitive_count;
    if (!count_all) break;
  }
  result.found = witness != kNoWitness;
  result.witness_mask = result.found ? witness : 0;
  result.checked = (!count_all && result.found) ? witness + 1 : total;
  return result;
}

ScanResult scan_orientations_serial(const Graph& g, StepPair steps, bool count_all) {
  ScanResult result;
  MaskChecker checker(g, steps);
  std::uint64_t total = orientation_count(g);
  std::uint64_t witness = kNoWitness;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!checker.competitive(mask)) continue;
    if (witness == kNoWitness) witness = mask;
    ++result.competitive_count;
    if (!count_all) break;
  }
  result.found = witness != kNoWitness;
  result.witness_mask = result.found ? witness : 0;
  result.checked = (!count_all && result.found) ? witness + 1 : total;
  return result;
}

ScanResult scan_orientations_parallel(const Graph& g, StepPair steps, bool count_all, int jobs) {
#ifndef _OPENMP
  (void)jobs;
  return scan_orientations_serial(g, steps, count_all);
#else
  std::uint64_t total = orientation_count(g);
  constexpr std::uint64_t kChunk = 4096;
  std::int64_t chunks = static_cast<std::int64_t>((total + kChunk - 1) / kChunk);
  int threads = jobs > 0 ? jobs : omp_get_max_threads();

  std::atomic<std::uint64_t> best{kNoWitness};
  std::uint64_t count = 0;

#pragma omp parallel num_threads(threads) reduction(+ : count)
  {
    MaskChecker checker(g, steps);
#pragma omp for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
      std::uint64_t hi = std::min(total, lo + kChunk);
      if (!count_all && lo >= best.load(std::memory_order_relaxed)) continue;
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        if (!count_all && mask >= best.load(std::memory_order_relaxed)) break;
        if (!checker.competitive(mask)) continue;
        ++count;
        atomic_min(best, mask);
        if (!count_all) break;  // first hit in the chunk is the chunk minimum
      }
    }
  }

  ScanResult result;
  std::uint64_t witness = best.load();
  result.found = witness != kNoWitness;
  result.witness_mask = result.found ? witness : 0;
  result.competitive_count = count_all ? count : (result.found ? 1 : 0);
  result.checked = (!count_all && result.found) ? witness + 1 : total;
  return result;
#endif
}

BruteForceResult brute_force_orientable(const Graph& g, StepPair steps,
                                        const BruteForceOptions& options) {
  if (g.vertex_count() < 2)
    throw std::invalid_argument("orientability needs at least two vertices");
  require_enumerable(g, options.edge_cap);

  BruteForceResult result;
  if (options.quick_reject && !check_necessary(g, steps).all_pass()) {
    result.quick_rejected = true;
    if (options.count_all) result.competitive_count = 0;
    return result;
  }

  ScanResult scan = options.jobs == 1
                        ? scan_orientations_serial(g, steps, options.count_all)
                        : scan_orientations_parallel(g, steps, options.count_all, options.jobs);
  result.orientable = scan.found;
  if (scan.found) result.witness_mask = scan.witness_mask;
  if (options.count_all) result.competitive_count = scan.competitive_count;
  result.orientations_checked = scan.checked;
  return result;
}

Digraph random_digraph(int n, double arc_probability, std::uint64_t rng_seed) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (!(arc_probability >= 0.0 && arc_probability <= 1.0))
    throw std::invalid_argument("arc probability must lie in [0,1]");
  std::mt19937_64 rng(rng_seed);
  // Raw engine output keeps draws identical across platforms.
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit() >= arc_probability) continue;
      arcs.emplace_back(rng() & 1 ? Arc{v, u} : Arc{u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

std::string brute_force_csv_header() {
  return "partition,steps,orientable,witness_mask,orientations_checked,elapsed_ms";
}

std::string brute_force_csv_row(const std::string& instance, StepPair steps,
                                const BruteForceResult& result, long long elapsed_ms) {
  std::string row = "\"" + instance + "\",\"" + std::to_string(steps.i) + "," +
                    std::to_string(steps.j) + "\",";
  row += result.orientable ? "true" : "false";
  row += ",";
  if (result.witness_mask) row += std::to_string(*result.witness_mask);
  row += "," + std::to_string(result.orientations_checked);
  row += "," + std::to_string(elapsed_ms);
  return row;
}

}  // namespace stepcomp
