#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "stepcomp/partition.hpp"

namespace stepcomp {

// Error in the arc-list text format. line() is 1-based; 0 means the problem
// concerns the file as a whole (e.g. an incomplete kpartite orientation).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

using ParsedDigraph = std::variant<Digraph, PartitionedDigraph>;

const Digraph& digraph_of(const ParsedDigraph& parsed);

// Arc-list format:
//   line 1: "digraph <n>"  or  "kpartite <n1> <n2> ... <nk>"  (non-increasing)
//   then:   "arc <u> <v>"  (0-based); '#' starts a comment
// A kpartite header makes vertices 0..n1-1 block 0, the next n2 block 1, ...
// and requires the arcs to orient the complete multipartite graph.
ParsedDigraph parse_digraph(std::string_view text);
ParsedDigraph parse_digraph_file(const std::string& path);

// Canonical text: header plus one "arc u v" line per arc in sorted order.
// parse_digraph(emit_digraph(x)) == x.
std::string emit_digraph(const Digraph& d);
std::string emit_digraph(const PartitionedDigraph& pd);

// Graphviz output; partitioned digraphs render blocks as same-rank clusters.
std::string export_dot(const Digraph& d);
std::string export_dot(const PartitionedDigraph& pd);
std::string export_dot(const Graph& g);

}  // namespace stepcomp
