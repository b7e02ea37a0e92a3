// Drives the installed binary end to end: exit-code contract, output
// formats, and the construct -> verify round trip through the file format.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "stepcomp/io.hpp"
#include "stepcomp/oracle.hpp"
#include "stepcomp/seeds.hpp"

using namespace stepcomp;

namespace {

struct CmdResult {
  int exit_code;
  std::string out;
};

CmdResult run_raw(const std::string& command) {
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[512];
  while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

CmdResult run(const std::string& args) {
  return run_raw(std::string(STEPCOMP_CLI_PATH) + " " + args);
}

std::string seeds_path(const std::string& name) {
  return std::string(STEPCOMP_SEEDS_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("decide exit codes and report") {
  CmdResult orientable = run("decide --partition 10,5 --steps 1,2");
  CHECK(orientable.exit_code == 0);
  CHECK(orientable.out == "Orientable [A(a)(ii)] seed=D2\n");

  CHECK(run("decide --partition 9,5 --steps 1,2").exit_code == 1);
  CHECK(run("decide --partition 5,5 --steps 1,1").exit_code == 3);
  CHECK(run("decide --partition banana --steps 1,2").exit_code == 2);
  CHECK(run("decide --steps 1,2").exit_code == 2);
  CHECK(run("decide --partition 4,4 --steps 0,2").exit_code == 2);

  // sizes are sorted and steps canonicalized before deciding
  CHECK(run("decide --partition 5,10 --steps 2,1").out == "Orientable [A(a)(ii)] seed=D2\n");
}

TEST_CASE("construct writes verified arc lists") {
  std::string out_path = temp_path("stepcomp_d1.arcs");
  std::remove(out_path.c_str());
  CHECK(run("construct --partition 6,6 --steps 1,2 -o " + out_path).exit_code == 0);
  CHECK(std::get<PartitionedDigraph>(parse_digraph_file(out_path)) == seed(SeedKind::D1));

  std::string dot_path = temp_path("stepcomp_d1.dot");
  CHECK(run("construct --partition 6,6 --steps 1,2 -o " + out_path + " --dot " + dot_path)
            .exit_code == 0);
  std::ifstream dot(dot_path);
  std::string dot_text((std::istreambuf_iterator<char>(dot)), std::istreambuf_iterator<char>());
  CHECK(dot_text.find("->") != std::string::npos);
  CHECK(dot_text.find("cluster_1") != std::string::npos);

  std::string absent = temp_path("stepcomp_none.arcs");
  std::remove(absent.c_str());
  CHECK(run("construct --partition 3,2,1 --steps 2,2 -o " + absent).exit_code == 1);
  CHECK_FALSE(std::ifstream(absent).good());  // nothing written on failure

  CHECK(run("construct --partition 4,4 --steps 1,1").exit_code == 3);
}

TEST_CASE("construct output re-passes verify through the file format") {
  for (const char* args : {"--partition 7,5 --steps 2,2", "--partition 1,1,1,1,1,1 --steps 1,2",
                           "--partition 13,6 --steps 1,2"}) {
    std::string path = temp_path("stepcomp_roundtrip.arcs");
    CHECK(run(std::string("construct ") + args + " -o " + path).exit_code == 0);
    std::string steps(std::string(args).substr(std::string(args).find("--steps")));
    CHECK(run("verify " + path + " " + steps).exit_code == 0);
  }
}

TEST_CASE("verify classifies seed files") {
  CmdResult good = run("verify " + seeds_path("d10.arcs") + " --steps 1,2");
  CHECK(good.exit_code == 0);
  CHECK(good.out == "competitive\n");

  CmdResult bad = run("verify " + seeds_path("d7.arcs") + " --steps 1,2");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("noncompeting pair:") == 0);
  CHECK(run("verify " + seeds_path("d7.arcs") + " --steps 2,2").exit_code == 0);

  // a vertex of out-degree 1 sinks the whole digraph
  std::string cycle = temp_path("stepcomp_cycle.arcs");
  std::ofstream(cycle) << "digraph 3\narc 0 1\narc 1 2\narc 2 0\n";
  CHECK(run("verify " + cycle + " --steps 2,2").exit_code == 1);

  CHECK(run("verify /nonexistent.arcs --steps 1,2").exit_code == 2);
}

TEST_CASE("competition-graph output formats") {
  CmdResult complete = run("competition-graph " + seeds_path("d10.arcs") + " --steps 1,2");
  CHECK(complete.exit_code == 0);
  CHECK(count_lines(complete.out) == 10);  // K_5

  std::string cycle = temp_path("stepcomp_cycle3.arcs");
  std::ofstream(cycle) << "digraph 3\narc 0 1\narc 1 2\narc 2 0\n";
  CHECK(run("competition-graph " + cycle + " --steps 1,1").out.empty());

  // at (1,1) the K_{4,4} seed misses at least one same-block pair
  CmdResult partial = run("competition-graph " + seeds_path("d3.arcs") + " --steps 1,1");
  CHECK(count_lines(partial.out) < 28);

  CmdResult csv = run("competition-graph " + seeds_path("d10.arcs") + " --steps 1,2 --format csv");
  CHECK(csv.out.find("0,1\n") == 0);
  CmdResult dot = run("competition-graph " + seeds_path("d10.arcs") + " --steps 1,2 --format dot");
  CHECK(dot.out.find("graph G {") == 0);
  CHECK(dot.out.find("--") != std::string::npos);
}

TEST_CASE("brute-force reports csv and honors the audit flag") {
  CmdResult rejected = run("brute-force --partition 3,3 --steps 1,2");
  CHECK(rejected.exit_code == 1);
  CHECK(rejected.out.find(brute_force_csv_header()) == 0);
  CHECK(rejected.out.find("\"3,3\",\"1,2\",false,,0,") != std::string::npos);

  CmdResult audited = run("brute-force --partition 3,3 --steps 1,2 --audit");
  CHECK(audited.exit_code == 1);
  CHECK(audited.out.find("\"3,3\",\"1,2\",false,,512,") != std::string::npos);

  CmdResult found = run("brute-force --partition 2,2,2 --steps 1,2");
  CHECK(found.exit_code == 0);
  CHECK(found.out.find("\"2,2,2\",\"1,2\",true,") != std::string::npos);

  CmdResult counted = run("brute-force --partition 1,1,1,1,1 --steps 1,2 --count --jobs 2");
  CHECK(counted.exit_code == 0);

  CmdResult empty_count = run("brute-force --partition 4,4 --steps 1,2 --count");
  CHECK(empty_count.exit_code == 1);
  CHECK(empty_count.out.find("\"4,4\",\"1,2\",false,,65536,") != std::string::npos);

  // identical flags reproduce the row apart from the elapsed column
  auto strip_elapsed = [](const std::string& text) {
    return text.substr(0, text.rfind(','));
  };
  CmdResult first = run("brute-force --partition 2,2,2 --steps 1,2");
  CmdResult second = run("brute-force --partition 2,2,2 --steps 1,2");
  CHECK(strip_elapsed(first.out) == strip_elapsed(second.out));

  CHECK(run("brute-force --steps 1,2").exit_code == 2);
  CHECK(run("brute-force --partition 4,4 --steps 1,2 --cap 10").exit_code == 2);
  CHECK(run_raw(std::string("STEPCOMP_EDGE_CAP=10 ") + STEPCOMP_CLI_PATH +
                " brute-force --partition 4,4 --steps 1,2")
            .exit_code == 2);
}

TEST_CASE("necessary reports all six checks") {
  CmdResult fail = run("necessary --partition 3,2,1 --steps 1,2");
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("(2)") != std::string::npos);
  CHECK(fail.out.find("FAIL") != std::string::npos);
  CHECK(fail.out.find("(3) degree-2 reduction") != std::string::npos);

  CmdResult pass = run("necessary --partition 1,1,1,1,1 --steps 1,2");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("FAIL") == std::string::npos);
  CHECK(pass.out.find("inconclusive") != std::string::npos);

  // Two K_5 blocks joined only through two degree-2 vertices: every direct
  // condition holds at (2,2), but the reduction separates the blocks.
  std::string dumbbell = temp_path("stepcomp_dumbbell.arcs");
  {
    std::ofstream out(dumbbell);
    out << "digraph 12\n";
    for (int base : {0, 5})
      for (int u = base; u < base + 5; ++u)
        for (int v = u + 1; v < base + 5; ++v) out << "arc " << u << " " << v << "\n";
    out << "arc 0 10\narc 10 5\narc 0 11\narc 11 5\n";
  }
  CmdResult hidden = run("necessary " + dumbbell + " --steps 2,2");
  CHECK(hidden.exit_code == 1);
  CHECK(hidden.out.find("(3) degree-2 reduction ......... 10 vertices") != std::string::npos);
  CHECK(hidden.out.find("re-check FAIL") != std::string::npos);
  for (const char* direct : {"(1)", "(2)", "(4)", "(5)", "(6)"}) {
    auto pos = hidden.out.find(direct);
    REQUIRE(pos != std::string::npos);
    CHECK(hidden.out.substr(pos, hidden.out.find('\n', pos) - pos).find("FAIL") ==
          std::string::npos);
  }
}
