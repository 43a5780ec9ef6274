// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_EDGE_LIST_HPP_
#define GAPKIT_EDGE_LIST_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "gapkit/types.hpp"

namespace gapkit {

struct Edge {
  NodeId src;
  NodeId dst;
  bool operator==(const Edge&) const = default;
};

// Staging container between parsers/generators and the CSR builder. When
// weighted, weights[i] belongs to edges[i].
struct EdgeList {
  std::vector<Edge> edges;
  std::vector<EdgeWeight> weights;
  bool weighted = false;
  // Set by symmetric Matrix Market headers: only one direction is stored in
  // the file and the builder must add the mirror edges.
  bool needs_symmetrize = false;
  // Node count declared by a file header or generator; ids may leave
  // trailing vertices untouched.
  std::optional<int64_t> node_count;

  void Add(NodeId src, NodeId dst) { edges.push_back({src, dst}); }
  void Add(NodeId src, NodeId dst, EdgeWeight w) {
    edges.push_back({src, dst});
    weights.push_back(w);
  }
  size_t size() const { return edges.size(); }
};

}  // namespace gapkit

#endif  // GAPKIT_EDGE_LIST_HPP_
