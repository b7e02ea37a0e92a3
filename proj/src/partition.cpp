#include "stepcomp/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace stepcomp {

PartitionSpec::PartitionSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2) throw std::invalid_argument("partition needs at least two parts");
  long long total = 0;
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("partite set sizes must be positive");
    total += s;
  }
  if (total > std::numeric_limits<int>::max())
    throw std::invalid_argument("partition spans too many vertices");
  std::sort(sizes_.begin(), sizes_.end(), std::greater<int>());
  begin_.resize(sizes_.size() + 1, 0);
  for (std::size_t l = 0; l < sizes_.size(); ++l) begin_[l + 1] = begin_[l] + sizes_[l];
}

int PartitionSpec::block_of(Vertex v) const {
  if (v < 0 || v >= vertex_count()) throw std::out_of_range("block_of: vertex out of range");
  int block = 0;
  while (v >= begin_[block + 1]) ++block;
  return block;
}

int PartitionSpec::edge_count() const {
  long long n = vertex_count();
  long long squares = 0;
  for (int s : sizes_) squares += 1LL * s * s;
  long long edges = (n * n - squares) / 2;
  if (edges > std::numeric_limits<int>::max())
    throw std::overflow_error("edge count does not fit in int");
  return static_cast<int>(edges);
}

bool PartitionSpec::dominates(const PartitionSpec& other) const {
  if (part_count() != other.part_count()) return false;
  for (int l = 0; l < part_count(); ++l)
    if (sizes_[l] < other.sizes_[l]) return false;
  return true;
}

std::string PartitionSpec::to_string() const {
  std::string out;
  for (std::size_t l = 0; l < sizes_.size(); ++l) {
    if (l > 0) out += ',';
    out += std::to_string(sizes_[l]);
  }
  return out;
}

Graph complete_multipartite(const PartitionSpec& p) {
  std::vector<Edge> edges;
  edges.reserve(p.edge_count());
  int n = p.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (p.block_of(u) != p.block_of(v)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

PartitionedDigraph::PartitionedDigraph(Digraph d, PartitionSpec p)
    : d_(std::move(d)), part_(std::move(p)) {
  if (d_.vertex_count() != part_.vertex_count())
    throw std::invalid_argument("partition does not cover the vertex set");
  int n = d_.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      bool cross = part_.block_of(u) != part_.block_of(v);
      int joins = (d_.has_arc(u, v) ? 1 : 0) + (d_.has_arc(v, u) ? 1 : 0);
      if (!cross && joins != 0)
        throw std::invalid_argument("arc joins two vertices of block " +
                                    std::to_string(part_.block_of(u)));
      if (cross && joins != 1)
        throw std::invalid_argument("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                    ") is not oriented exactly once");
    }
  }
}

}  // namespace stepcomp
