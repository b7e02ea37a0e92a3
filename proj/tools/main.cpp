// Command-line front end: decide | construct | verify | competition-graph |
// brute-force | necessary. Exit codes: 0 positive, 1 negative, 2 usage or
// input error, 3 unsupported step pair (1,1).
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stepcomp/competition.hpp"
#include "stepcomp/io.hpp"
#include "stepcomp/oracle.hpp"
#include "stepcomp/synthesis.hpp"

namespace {

using namespace stepcomp;

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed " + what + " '" + text + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed " + what + " '" + text + "'");
    values.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

PartitionSpec parse_partition(const std::string& text) {
  auto sizes = parse_int_list(text, "partition");
  PartitionSpec p(sizes);  // sorts non-increasing
  if (p.sizes() != sizes)
    std::cerr << "note: partition sizes sorted to " << p.to_string() << "\n";
  return p;
}

StepPair parse_steps(const std::string& text) {
  auto values = parse_int_list(text, "steps");
  if (values.size() != 2) throw std::invalid_argument("steps must be given as i,j");
  StepPair steps(values[0], values[1]);
  if (steps.i > steps.j)
    std::cerr << "note: steps reordered to (" << steps.j << "," << steps.i << ")\n";
  return steps.canonical();
}

int default_edge_cap() {
  if (const char* env = std::getenv("STEPCOMP_EDGE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "note: ignoring malformed STEPCOMP_EDGE_CAP\n";
    }
  }
  return kDefaultEdgeCap;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

Digraph load_digraph(const std::string& path) { return digraph_of(parse_digraph_file(path)); }

Graph load_graph_operand(const std::string& partition, const std::string& file) {
  if (!partition.empty()) return complete_multipartite(parse_partition(partition));
  return underlying_graph(load_digraph(file));
}

int run_decide(const std::string& partition, const std::string& steps_text) {
  Verdict verdict = decide(parse_partition(partition), parse_steps(steps_text));
  switch (verdict.outcome) {
    case Orientability::Orientable:
      std::cout << "Orientable [" << verdict.clause << "] seed=" << verdict.plan->seed.name()
                << "\n";
      return kExitPositive;
    case Orientability::NotOrientable:
      std::cout << "NotOrientable [" << verdict.clause << "]\n";
      return kExitNegative;
    case Orientability::Unsupported:
      std::cout << "Unsupported [steps (1,1) are out of scope]\n";
      return kExitUnsupported;
  }
  return kExitUsage;
}

int run_construct(const std::string& partition, const std::string& steps_text,
                  const std::string& out_path, const std::string& dot_path) {
  StepPair steps = parse_steps(steps_text);
  ConstructResult result = construct(parse_partition(partition), steps);
  if (result.verdict.outcome == Orientability::Unsupported) {
    std::cerr << "unsupported: steps (1,1) are out of scope\n";
    return kExitUnsupported;
  }
  if (result.verdict.outcome == Orientability::NotOrientable) {
    std::cerr << "not orientable [" << result.verdict.clause << "]\n";
    return kExitNegative;
  }
  write_output(out_path, emit_digraph(*result.digraph));
  if (!dot_path.empty()) write_output(dot_path, export_dot(*result.digraph));
  std::cerr << "constructed via " << result.verdict.plan->seed.name() << " ["
            << result.verdict.clause << "], verified (" << steps.i << "," << steps.j
            << ")-step competitive\n";
  return kExitPositive;
}

int run_verify(const std::string& file, const std::string& steps_text) {
  Digraph d = load_digraph(file);
  auto failing = first_noncompeting_pair(d, parse_steps(steps_text));
  if (!failing) {
    std::cout << "competitive\n";
    return kExitPositive;
  }
  std::cout << "noncompeting pair: " << failing->first << " " << failing->second << "\n";
  return kExitNegative;
}

int run_competition_graph(const std::string& file, const std::string& steps_text,
                          const std::string& out_path, const std::string& format) {
  Graph cg = competition_graph(load_digraph(file), parse_steps(steps_text));
  std::string content;
  if (format == "dot") {
    content = export_dot(cg);
  } else {
    const char* sep = format == "csv" ? "," : " ";
    for (const auto& [u, v] : cg.edges())
      content += std::to_string(u) + sep + std::to_string(v) + "\n";
  }
  write_output(out_path, content);
  return kExitPositive;
}

int run_brute_force(const std::string& partition, const std::string& file,
                    const std::string& steps_text, bool count, bool audit, int cap, int jobs) {
  StepPair steps = parse_steps(steps_text);
  Graph g;
  std::string instance = file;
  if (!partition.empty()) {
    PartitionSpec p = parse_partition(partition);
    // refuse before materializing a graph that is too large to scan anyway
    if (p.edge_count() > cap)
      throw std::runtime_error("K_{" + p.to_string() + "} has " +
                               std::to_string(p.edge_count()) +
                               " edges, above the enumeration cap of " + std::to_string(cap) +
                               "; raise the cap (--cap) to enumerate anyway");
    g = complete_multipartite(p);
    instance = p.to_string();
  } else {
    g = underlying_graph(load_digraph(file));
  }
  BruteForceOptions options;
  options.edge_cap = cap;
  options.count_all = count;
  options.quick_reject = !audit;
  options.jobs = jobs;
  auto start = std::chrono::steady_clock::now();
  BruteForceResult result = brute_force_orientable(g, steps, options);
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count();
  std::cout << brute_force_csv_header() << "\n"
            << brute_force_csv_row(instance, steps, result, elapsed) << "\n";
  if (result.quick_rejected)
    std::cerr << "settled by necessary conditions without enumeration\n";
  if (count && result.competitive_count)
    std::cerr << "competitive orientations: " << *result.competitive_count << "\n";
  return result.orientable ? kExitPositive : kExitNegative;
}

int run_necessary(const std::string& partition, const std::string& file,
                  const std::string& steps_text) {
  StepPair steps = parse_steps(steps_text);
  Graph g = load_graph_operand(partition, file);
  NecessaryReport report = check_necessary(g, steps);
  auto line = [](const char* label, const NecessaryReport::Condition& c) {
    std::cout << label << (c.pass ? "pass" : "FAIL  [" + c.counterexample + "]") << "\n";
  };
  std::cout << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  line("(1) minimum degree >= 2 ........ ", report.min_degree);
  line("(2) |V| >= 5 and |E| >= 2|V| ... ", report.size_bounds);

  // Deleting a degree-2 vertex preserves orientability, so a reduced graph
  // that violates the conditions condemns the input as well.
  Graph reduced = reduce_degree_two(g);
  bool reduced_ok = true;
  std::cout << "(3) degree-2 reduction ......... ";
  if (reduced == g) {
    std::cout << "no degree-2 vertices, nothing removed\n";
  } else {
    std::cout << reduced.vertex_count() << " vertices, " << reduced.edge_count()
              << " edges remain; re-check ";
    NecessaryReport after = check_necessary(reduced, steps);
    reduced_ok = after.all_pass();
    if (reduced_ok) {
      std::cout << "pass\n";
    } else {
      const NecessaryReport::Condition* failed = &after.min_degree;
      for (const auto* c : {&after.min_degree, &after.size_bounds, &after.avoiding_walks,
                            &after.diameter, &after.edge_connectivity})
        if (!c->pass) failed = c;
      std::cout << "FAIL  [" << failed->counterexample << "]\n";
    }
  }

  line("(4) short walks off each edge .. ", report.avoiding_walks);
  line("(5) diameter <= i+j ............ ", report.diameter);
  line("(6) 2-edge-connected ........... ", report.edge_connectivity);
  if (report.all_pass() && reduced_ok) {
    std::cout << "all necessary conditions hold (inconclusive)\n";
    return kExitPositive;
  }
  std::cout << "necessary condition violated: not orientable at these steps\n";
  return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(i,j)-step competitive orientations: decide, construct, verify"};
  app.require_subcommand(1);

  std::string partition, file, steps_text, out_path, dot_path;
  std::string format = "text";
  bool count = false, audit = false;
  int cap = default_edge_cap();
  int jobs = 1;

  auto* cmd_decide = app.add_subcommand("decide", "decide orientability of K_{n1,...,nk}");
  cmd_decide->add_option("--partition", partition, "partite set sizes, e.g. 10,5")->required();
  cmd_decide->add_option("--steps", steps_text, "step bounds i,j")->required();

  auto* cmd_construct =
      app.add_subcommand("construct", "build a competitive orientation when one exists");
  cmd_construct->add_option("--partition", partition)->required();
  cmd_construct->add_option("--steps", steps_text)->required();
  cmd_construct->add_option("-o,--output", out_path, "arc-list output path (default stdout)");
  cmd_construct->add_option("--dot", dot_path, "also write Graphviz output here");

  auto* cmd_verify = app.add_subcommand("verify", "check a digraph file for competitiveness");
  cmd_verify->add_option("file", file, "arc-list digraph file")->required();
  cmd_verify->add_option("--steps", steps_text)->required();

  auto* cmd_cg = app.add_subcommand("competition-graph", "emit the step competition graph");
  cmd_cg->add_option("file", file)->required();
  cmd_cg->add_option("--steps", steps_text)->required();
  cmd_cg->add_option("-o,--output", out_path);
  cmd_cg->add_option("--format", format, "text|csv|dot")
      ->check(CLI::IsMember({"text", "csv", "dot"}));

  auto* cmd_bf = app.add_subcommand("brute-force", "enumerate orientations exhaustively");
  cmd_bf->add_option("file", file, "arc-list file; its underlying graph is used");
  cmd_bf->add_option("--partition", partition);
  cmd_bf->add_option("--steps", steps_text)->required();
  cmd_bf->add_flag("--count", count, "count all competitive orientations");
  cmd_bf->add_flag("--audit", audit, "enumerate even when necessary conditions fail");
  cmd_bf->add_option("--cap", cap, "edge cap for enumeration");
  cmd_bf->add_option("--jobs", jobs, "scan threads (0 = hardware default)");

  auto* cmd_nec = app.add_subcommand("necessary", "report the necessary conditions");
  cmd_nec->add_option("file", file);
  cmd_nec->add_option("--partition", partition);
  cmd_nec->add_option("--steps", steps_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_decide->parsed()) return run_decide(partition, steps_text);
    if (cmd_construct->parsed()) return run_construct(partition, steps_text, out_path, dot_path);
    if (cmd_verify->parsed()) return run_verify(file, steps_text);
    if (cmd_cg->parsed()) return run_competition_graph(file, steps_text, out_path, format);
    if (cmd_bf->parsed()) {
      if (partition.empty() == file.empty()) {
        std::cerr << "error: give exactly one of --partition or a file\n";
        return kExitUsage;
      }
      return run_brute_force(partition, file, steps_text, count, audit, cap, jobs);
    }
    if (cmd_nec->parsed()) {
      if (partition.empty() == file.empty()) {
        std::cerr << "error: give exactly one of --partition or a file\n";
        return kExitUsage;
      }
      return run_necessary(partition, file, steps_text);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
