// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_GRAPH_HPP_
#define GAPKIT_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gapkit/types.hpp"

namespace gapkit {

// Immutable compressed-sparse-row graph.
//
// num_edges() counts stored directed edges, so an undirected graph counts
// each edge twice (once per endpoint). Neighbor lists are sorted ascending
// with no duplicates and no self-loops. Directed graphs carry a materialized
// incoming adjacency; for undirected graphs the in_* accessors alias the
// out-arrays. Once built, a graph is safe to share across threads.
class CsrGraph {
 public:
  CsrGraph() = default;

  CsrGraph(bool directed, bool weighted, int64_t num_nodes,
           std::vector<int64_t> out_offsets, std::vector<NodeId> out_neighbors,
           std::vector<EdgeWeight> out_weights,
           std::vector<int64_t> in_offsets = {},
           std::vector<NodeId> in_neighbors = {},
           std::vector<EdgeWeight> in_weights = {})
      : directed_(directed),
        weighted_(weighted),
        num_nodes_(num_nodes),
        num_edges_(out_offsets.empty() ? 0 : out_offsets.back()),
        out_offsets_(std::move(out_offsets)),
        out_neighbors_(std::move(out_neighbors)),
        out_weights_(std::move(out_weights)),
        in_offsets_(std::move(in_offsets)),
        in_neighbors_(std::move(in_neighbors)),
        in_weights_(std::move(in_weights)) {}

  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }
  int64_t num_nodes() const { return num_nodes_; }
  int64_t num_edges() const { return num_edges_; }

  int64_t out_degree(NodeId u) const {
    return out_offsets_[u + 1] - out_offsets_[u];
  }
  int64_t in_degree(NodeId u) const {
    const auto& offs = directed_ ? in_offsets_ : out_offsets_;
    return offs[u + 1] - offs[u];
  }

  std::span<const NodeId> out_neigh(NodeId u) const {
    return {out_neighbors_.data() + out_offsets_[u],
            static_cast<size_t>(out_degree(u))};
  }
  std::span<const NodeId> in_neigh(NodeId u) const {
    const auto& offs = directed_ ? in_offsets_ : out_offsets_;
    const auto& nbrs = directed_ ? in_neighbors_ : out_neighbors_;
    return {nbrs.data() + offs[u], static_cast<size_t>(offs[u + 1] - offs[u])};
  }
  std::span<const EdgeWeight> out_edge_weights(NodeId u) const {
    return {out_weights_.data() + out_offsets_[u],
            static_cast<size_t>(out_degree(u))};
  }
  std::span<const EdgeWeight> in_edge_weights(NodeId u) const {
    const auto& offs = directed_ ? in_offsets_ : out_offsets_;
    const auto& wts = directed_ ? in_weights_ : out_weights_;
    return {wts.data() + offs[u], static_cast<size_t>(offs[u + 1] - offs[u])};
  }

  // Flat index of u's first out-edge; edge j of u lives at out_offset(u)+j.
  int64_t out_offset(NodeId u) const { return out_offsets_[u]; }

  bool HasOutEdge(NodeId u, NodeId v) const {
    auto neigh = out_neigh(u);
    return std::binary_search(neigh.begin(), neigh.end(), v);
  }

  // Whole-array views (serialization, tests).
  const std::vector<int64_t>& out_offsets() const { return out_offsets_; }
  const std::vector<NodeId>& out_neighbors() const { return out_neighbors_; }
  const std::vector<EdgeWeight>& out_weights() const { return out_weights_; }
  const std::vector<int64_t>& in_offsets() const {
    return directed_ ? in_offsets_ : out_offsets_;
  }
  const std::vector<NodeId>& in_neighbors() const {
    return directed_ ? in_neighbors_ : out_neighbors_;
  }
  const std::vector<EdgeWeight>& in_weights() const {
    return directed_ ? in_weights_ : out_weights_;
  }

  // Returns a description of the first violated structural invariant, or
  // nullopt when the representation is sound. O(m log m); meant for loaders
  // and tests, not kernel paths.
  std::optional<std::string> CheckInvariants() const {
    if (num_nodes_ < 0)
      return "negative node count";
    if (static_cast<int64_t>(out_offsets_.size()) != num_nodes_ + 1)
      return "out_offsets length != n+1";
    if (out_offsets_.front() != 0)
      return "out_offsets[0] != 0";
    for (int64_t v = 0; v < num_nodes_; v++) {
      if (out_offsets_[v] > out_offsets_[v + 1])
        return "out_offsets not monotone at " + std::to_string(v);
    }
    if (out_offsets_.back() != num_edges_)
      return "out_offsets[n] != m";
    if (static_cast<int64_t>(out_neighbors_.size()) != num_edges_)
      return "out_neighbors length != m";
    if (weighted_ &&
        static_cast<int64_t>(out_weights_.size()) != num_edges_)
      return "out_weights length != m";
    if (!weighted_ && !out_weights_.empty())
      return "unweighted graph carries weights";
    if (auto msg = CheckAdjacency(out_offsets_, out_neighbors_))
      return "out adjacency: " + *msg;
    if (directed_) {
      if (static_cast<int64_t>(in_offsets_.size()) != num_nodes_ + 1)
        return "in_offsets length != n+1";
      if (in_offsets_.front() != 0 || in_offsets_.back() != num_edges_)
        return "in_offsets endpoints wrong";
      if (static_cast<int64_t>(in_neighbors_.size()) != num_edges_)
        return "in_neighbors length != m";
      if (auto msg = CheckAdjacency(in_offsets_, in_neighbors_))
        return "in adjacency: " + *msg;
      // Same edge multiset both ways: equal sizes plus containment.
      for (NodeId v = 0; v < num_nodes_; v++) {
        for (int64_t j = in_offsets_[v]; j < in_offsets_[v + 1]; j++) {
          if (!HasOutEdge(in_neighbors_[j], v))
            return "in-edge (" + std::to_string(in_neighbors_[j]) + "," +
                   std::to_string(v) + ") missing from out adjacency";
        }
      }
    } else {
      for (NodeId u = 0; u < num_nodes_; u++) {
        for (NodeId v : out_neigh(u)) {
          if (!HasOutEdge(v, u))
            return "undirected edge (" + std::to_string(u) + "," +
                   std::to_string(v) + ") has no mirror";
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<std::string> CheckAdjacency(
      const std::vector<int64_t>& offs, const std::vector<NodeId>& nbrs) const {
    for (NodeId u = 0; u < num_nodes_; u++) {
      for (int64_t j = offs[u]; j < offs[u + 1]; j++) {
        NodeId v = nbrs[j];
        if (static_cast<int64_t>(v) >= num_nodes_)
          return "neighbor id out of range at vertex " + std::to_string(u);
        if (v == u)
          return "self-loop at vertex " + std::to_string(u);
        if (j > offs[u] && nbrs[j - 1] >= v)
          return "neighbor list of " + std::to_string(u) +
                 " not sorted/deduped";
      }
    }
    return std::nullopt;
  }

  bool directed_ = false;
  bool weighted_ = false;
  int64_t num_nodes_ = 0;
  int64_t num_edges_ = 0;
  std::vector<int64_t> out_offsets_{0};
  std::vector<NodeId> out_neighbors_;
  std::vector<EdgeWeight> out_weights_;
  std::vector<int64_t> in_offsets_;
  std::vector<NodeId> in_neighbors_;
  std::vector<EdgeWeight> in_weights_;
};

}  // namespace gapkit

#endif  // GAPKIT_GRAPH_HPP_
