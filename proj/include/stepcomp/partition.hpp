#pragma once

#include <string>
#include <vector>

#include "stepcomp/digraph.hpp"
#include "stepcomp/graph.hpp"

namespace stepcomp {

// Multiset of partite-set sizes identifying a complete multipartite graph.
// Sizes are kept sorted non-increasing; vertices 0..n1-1 form block 0, the
// next n2 form block 1, and so on.
class PartitionSpec {
 public:
  // Sorts the sizes non-increasing. Requires at least two parts, all >= 1.
  explicit PartitionSpec(std::vector<int> sizes);

  int part_count() const { return static_cast<int>(sizes_.size()); }
  int vertex_count() const { return begin_.back(); }
  int size(int block) const { return sizes_.at(block); }
  const std::vector<int>& sizes() const { return sizes_; }
  int block_begin(int block) const { return begin_.at(block); }
  int block_of(Vertex v) const;
  int edge_count() const;  // of the complete multipartite graph
  // Same arity and every block at least as large as in `other`.
  bool dominates(const PartitionSpec& other) const;
  std::string to_string() const;  // "4,2,1"

  bool operator==(const PartitionSpec& other) const { return sizes_ == other.sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<int> begin_;  // prefix offsets, length part_count()+1
};

Graph complete_multipartite(const PartitionSpec& p);

// An orientation of a complete multipartite graph: no arc inside a block,
// exactly one arc across every cross-block pair. Validated on construction.
class PartitionedDigraph {
 public:
  PartitionedDigraph(Digraph d, PartitionSpec p);

  const Digraph& digraph() const { return d_; }
  const PartitionSpec& partition() const { return part_; }
  int block_of(Vertex v) const { return part_.block_of(v); }

  bool operator==(const PartitionedDigraph& other) const {
    return d_ == other.d_ && part_ == other.part_;
  }

 private:
  Digraph d_;
  PartitionSpec part_;
};

}  // namespace stepcomp
