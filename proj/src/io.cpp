#include "stepcomp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace stepcomp {

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

const Digraph& digraph_of(const ParsedDigraph& parsed) {
  if (const auto* pd = std::get_if<PartitionedDigraph>(&parsed)) return pd->digraph();
  return std::get<Digraph>(parsed);
}

namespace {

bool parse_int(const std::string& token, int& value) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

ParsedDigraph parse_digraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;

  bool have_header = false;
  bool partitioned = false;
  int n = 0;
  std::vector<int> sizes;
  std::vector<Arc> arcs;
  std::set<Arc> seen;

  auto block_of = [&](Vertex v) {
    int block = 0, end = sizes.empty() ? 0 : sizes[0];
    while (v >= end) end += sizes[++block];
    return block;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0] == "digraph") {
        if (tokens.size() != 2 || !parse_int(tokens[1], n) || n < 0)
          throw ParseError(lineno, "expected 'digraph <n>'");
      } else if (tokens[0] == "kpartite") {
        if (tokens.size() < 3) throw ParseError(lineno, "kpartite needs at least two sizes");
        for (std::size_t k = 1; k < tokens.size(); ++k) {
          int s;
          if (!parse_int(tokens[k], s) || s < 1)
            throw ParseError(lineno, "partite set sizes must be positive integers");
          if (!sizes.empty() && s > sizes.back())
            throw ParseError(lineno, "partite set sizes must be non-increasing");
          sizes.push_back(s);
          n += s;
        }
        partitioned = true;
      } else {
        throw ParseError(lineno, "expected 'digraph <n>' or 'kpartite <n1> ... <nk>'");
      }
      have_header = true;
      continue;
    }

    if (tokens[0] != "arc" || tokens.size() != 3)
      throw ParseError(lineno, "expected 'arc <u> <v>'");
    int u, v;
    if (!parse_int(tokens[1], u) || !parse_int(tokens[2], v))
      throw ParseError(lineno, "expected 'arc <u> <v>'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(lineno, "vertex out of range 0.." + std::to_string(n - 1));
    if (u == v) throw ParseError(lineno, "loop arc");
    if (seen.count({u, v})) throw ParseError(lineno, "duplicate arc");
    if (seen.count({v, u}))
      throw ParseError(lineno, "arc opposes an earlier one (directed 2-cycle)");
    if (partitioned && block_of(u) == block_of(v))
      throw ParseError(lineno, "arc joins two vertices of the same block");
    seen.insert({u, v});
    arcs.emplace_back(u, v);
  }
  if (!have_header) throw ParseError(lineno, "missing header line");

  Digraph d(n, std::move(arcs));
  if (!partitioned) return d;
  PartitionSpec part(sizes);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part.block_of(u) != part.block_of(v) && !d.has_arc(u, v) && !d.has_arc(v, u))
        throw ParseError(0, "pair (" + std::to_string(u) + "," + std::to_string(v) +
                                ") is missing an orientation");
  return PartitionedDigraph(std::move(d), std::move(part));
}

ParsedDigraph parse_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_digraph(text.str());
}

namespace {

std::string emit_arcs(const Digraph& d) {
  std::string out;
  for (const auto& [u, v] : d.arcs())
    out += "arc " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace

std::string emit_digraph(const Digraph& d) {
  return "digraph " + std::to_string(d.vertex_count()) + "\n" + emit_arcs(d);
}

std::string emit_digraph(const PartitionedDigraph& pd) {
  std::string out = "kpartite";
  for (int s : pd.partition().sizes()) out += " " + std::to_string(s);
  out += "\n";
  return out + emit_arcs(pd.digraph());
}

std::string export_dot(const Digraph& d) {
  std::string out = "digraph G {\n";
  for (const auto& [u, v] : d.arcs())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string export_dot(const PartitionedDigraph& pd) {
  const auto& part = pd.partition();
  std::string out = "digraph G {\n";
  for (int l = 0; l < part.part_count(); ++l) {
    out += "  subgraph cluster_" + std::to_string(l) + " { rank=same;";
    for (Vertex v = part.block_begin(l); v < part.block_begin(l) + part.size(l); ++v)
      out += " " + std::to_string(v) + ";";
    out += " }\n";
  }
  for (const auto& [u, v] : pd.digraph().arcs())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string export_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (const auto& [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace stepcomp
