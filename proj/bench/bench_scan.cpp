// Times the orientation-scan kernels against each other: the engine-backed
// reference, the serial bitset kernel, and the OpenMP kernel at several
// thread counts. Counting mode is used so every variant does the full scan.
#include <chrono>
#include <cstdio>
#include <vector>

#include "stepcomp/oracle.hpp"
#include "stepcomp/partition.hpp"

using namespace stepcomp;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void bench_instance(const char* name, const Graph& g, StepPair steps, bool include_reference) {
  std::printf("%s, steps (%d,%d), %d edges, %llu orientations\n", name, steps.i, steps.j,
              g.edge_count(), static_cast<unsigned long long>(orientation_count(g)));

  ScanResult serial;
  double t_serial = time_ms([&] { serial = scan_orientations_serial(g, steps, true); });
  std::printf("  %-22s %10.1f ms   count=%llu\n", "serial bitset", t_serial,
              static_cast<unsigned long long>(serial.competitive_count));

  if (include_reference) {
    ScanResult ref;
    double t_ref = time_ms([&] { ref = scan_orientations_reference(g, steps, true); });
    std::printf("  %-22s %10.1f ms   count=%llu (x%.1f vs serial)\n", "engine reference", t_ref,
                static_cast<unsigned long long>(ref.competitive_count), t_ref / t_serial);
  }

  for (int jobs : {2, 4, 0}) {
    ScanResult par;
    double t_par =
        time_ms([&] { par = scan_orientations_parallel(g, steps, true, jobs); });
    std::printf("  %-18s j=%-2d %10.1f ms   count=%llu (x%.2f speedup)\n", "openmp", jobs, t_par,
                static_cast<unsigned long long>(par.competitive_count), t_serial / t_par);
  }
  std::printf("\n");
}

}  // namespace

int main() {
  bench_instance("K_{2,2,2}", complete_multipartite(PartitionSpec({2, 2, 2})), StepPair(1, 2),
                 true);
  bench_instance("K_{3,3,1}", complete_multipartite(PartitionSpec({3, 3, 1})), StepPair(1, 2),
                 false);
  bench_instance("K_{4,4}", complete_multipartite(PartitionSpec({4, 4})), StepPair(2, 2), false);
  bench_instance("K_{6,3}", complete_multipartite(PartitionSpec({6, 3})), StepPair(1, 3), false);
  return 0;
}
