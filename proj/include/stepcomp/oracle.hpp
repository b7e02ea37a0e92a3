#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "stepcomp/competition.hpp"
#include "stepcomp/graph.hpp"
#include "stepcomp/partition.hpp"

namespace stepcomp {

// Enumeration refuses graphs with more edges than this unless overridden
// (2^22 orientations is still comfortable on a desk machine).
inline constexpr int kDefaultEdgeCap = 22;

// Orientation of g selected by `mask`: edges in lexicographic order, bit e
// clear orients edge e from its lower to its higher endpoint.
Digraph orient(const Graph& g, std::uint64_t mask);

std::uint64_t orientation_count(const Graph& g);  // 2^|E|

// Walks the orientations of a base graph in mask order. Sub-ranges of the
// mask space can be handed to independent consumers.
class OrientationCursor {
 public:
  explicit OrientationCursor(Graph base, int edge_cap = kDefaultEdgeCap);
  OrientationCursor(Graph base, std::uint64_t begin, std::uint64_t end,
                    int edge_cap = kDefaultEdgeCap);

  bool done() const { return mask_ >= end_; }
  void advance() { ++mask_; }
  std::uint64_t mask() const { return mask_; }
  Digraph current() const { return orient(base_, mask_); }
  const Graph& base() const { return base_; }

 private:
  Graph base_;
  std::uint64_t mask_;
  std::uint64_t end_;
};

inline OrientationCursor enumerate_orientations(Graph g, int edge_cap = kDefaultEdgeCap) {
  return OrientationCursor(std::move(g), edge_cap);
}

// Fast competitiveness test for digraphs with at most 62 vertices.
// Agrees exactly with is_competitive.
bool is_competitive_bitset(const Digraph& d, StepPair steps);

struct ScanResult {
  bool found = false;
  std::uint64_t witness_mask = 0;      // lowest competitive mask when found
  std::uint64_t competitive_count = 0; // filled in counting mode
  std::uint64_t checked = 0;           // serial-equivalent orientation count
};

// Mask-space scans for a competitive orientation. The three variants return
// identical results: `reference` decodes every orientation and runs the
// engine's is_competitive (slow, kept for testing), `serial` uses the bitset
// kernel, `parallel` splits the mask range across OpenMP threads with a
// shared early-exit and reports the lowest witness regardless of schedule.
ScanResult scan_orientations_reference(const Graph& g, StepPair steps, bool count_all);
ScanResult scan_orientations_serial(const Graph& g, StepPair steps, bool count_all);
ScanResult scan_orientations_parallel(const Graph& g, StepPair steps, bool count_all, int jobs);

struct BruteForceOptions {
  int edge_cap = kDefaultEdgeCap;
  bool count_all = false;    // count every competitive orientation
  bool quick_reject = true;  // test the necessary conditions before enumerating
  int jobs = 1;              // scan threads; 0 = hardware default
};

struct BruteForceResult {
  bool orientable = false;
  std::optional<std::uint64_t> witness_mask;
  std::optional<std::uint64_t> competitive_count;
  std::uint64_t orientations_checked = 0;
  bool quick_rejected = false;  // settled by the necessary conditions alone
};

BruteForceResult brute_force_orientable(const Graph& g, StepPair steps,
                                        const BruteForceOptions& options = {});

// Each unordered pair independently carries no arc with probability 1-p,
// otherwise a uniformly directed one. Identical output for identical seeds.
Digraph random_digraph(int n, double arc_probability, std::uint64_t rng_seed);

// Audit rows: partition,steps,orientable,witness_mask,orientations_checked,elapsed_ms
std::string brute_force_csv_header();
std::string brute_force_csv_row(const std::string& instance, StepPair steps,
                                const BruteForceResult& result, long long elapsed_ms);

}  // namespace stepcomp
