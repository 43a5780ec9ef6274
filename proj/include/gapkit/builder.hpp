// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_BUILDER_HPP_
#define GAPKIT_BUILDER_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "gapkit/edge_list.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

struct Permutation {
  std::vector<NodeId> new_id_of;  // bijection on [0, n)
};

struct RelabelResult {
  CsrGraph graph;
  Permutation perm;
};

namespace detail {

// Neighbor packed with the originating edge-list index. Sorting these gives
// neighbor-ascending order with ties broken by list position, so duplicate
// (u,v) pairs collapse onto the earliest occurrence and its weight.
inline uint64_t PackAdj(NodeId neighbor, uint32_t origin) {
  return (static_cast<uint64_t>(neighbor) << 32) | origin;
}
inline NodeId PackedNeighbor(uint64_t packed) {
  return static_cast<NodeId>(packed >> 32);
}
inline uint32_t PackedOrigin(uint64_t packed) {
  return static_cast<uint32_t>(packed);
}

}  // namespace detail

// Builds a CSR graph from an edge list. Self-loops are dropped and duplicate
// (u,v) pairs collapse to their first occurrence (first weight kept).
// Neighbor lists come out sorted. With symmetrize set, every edge is stored
// in both directions (sharing the original's weight) and the result is
// undirected regardless of the directed flag. Directed results always carry
// a materialized incoming adjacency. n is the declared node count when the
// edge list carries one, max endpoint id + 1 otherwise.
inline CsrGraph BuildCsr(const EdgeList& el, bool directed,
                         bool symmetrize = false) {
  if (el.weighted && el.weights.size() != el.edges.size())
    throw BuildError("weighted edge list with mismatched weight count");
  if (!el.weighted && !el.weights.empty())
    throw BuildError("unweighted edge list carries weights");

  const bool out_directed = directed && !symmetrize;

  int64_t max_plus_one = 0;
  for (const Edge& e : el.edges) {
    int64_t hi = static_cast<int64_t>(std::max(e.src, e.dst)) + 1;
    max_plus_one = std::max(max_plus_one, hi);
  }
  const int64_t n = el.node_count.value_or(max_plus_one);
  if (n < max_plus_one)
    throw BuildError("edge endpoint exceeds declared node count");
  if (el.edges.size() * (symmetrize ? 2u : 1u) >
      std::numeric_limits<uint32_t>::max())
    throw BuildError("edge list too large for the builder");

  // Raw degrees (self-loops excluded).
  std::vector<int64_t> offsets(n + 1, 0);
  for (const Edge& e : el.edges) {
    if (e.src == e.dst)
      continue;
    offsets[static_cast<int64_t>(e.src) + 1]++;
    if (symmetrize)
      offsets[static_cast<int64_t>(e.dst) + 1]++;
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  const int64_t m_raw = offsets[n];

  // Scatter neighbors carrying their edge-list index.
  std::vector<uint64_t> packed(m_raw);
  {
    std::vector<int64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (uint32_t i = 0; i < el.edges.size(); i++) {
      const Edge& e = el.edges[i];
      if (e.src == e.dst)
        continue;
      packed[cursor[e.src]++] = detail::PackAdj(e.dst, i);
      if (symmetrize)
        packed[cursor[e.dst]++] = detail::PackAdj(e.src, i);
    }
  }

  // Sort and dedup each neighbor list in place.
  std::vector<int64_t> final_deg(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t v = 0; v < n; v++) {
    auto begin = packed.begin() + offsets[v];
    auto end = packed.begin() + offsets[v + 1];
    std::sort(begin, end);
    auto out = begin;
    for (auto it = begin; it != end; ++it) {
      if (out == begin ||
          detail::PackedNeighbor(*(out - 1)) != detail::PackedNeighbor(*it)) {
        *out++ = *it;
      }
    }
    final_deg[v] = out - begin;
  }

  std::vector<int64_t> out_offsets(n + 1, 0);
  std::partial_sum(final_deg.begin(), final_deg.end(),
                   out_offsets.begin() + 1);
  const int64_t m = out_offsets[n];

  std::vector<NodeId> out_neighbors(m);
  std::vector<EdgeWeight> out_weights(el.weighted ? m : 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t v = 0; v < n; v++) {
    int64_t dst_pos = out_offsets[v];
    for (int64_t j = offsets[v]; j < offsets[v] + final_deg[v]; j++) {
      out_neighbors[dst_pos] = detail::PackedNeighbor(packed[j]);
      if (el.weighted)
        out_weights[dst_pos] = el.weights[detail::PackedOrigin(packed[j])];
      dst_pos++;
    }
  }
  packed.clear();
  packed.shrink_to_fit();

  // Incoming adjacency, transposed from the deduped out-edges so both
  // directions describe exactly the same edge set.
  std::vector<int64_t> in_offsets;
  std::vector<NodeId> in_neighbors;
  std::vector<EdgeWeight> in_weights;
  if (out_directed) {
    in_offsets.assign(n + 1, 0);
    for (NodeId v : out_neighbors)
      in_offsets[static_cast<int64_t>(v) + 1]++;
    std::partial_sum(in_offsets.begin(), in_offsets.end(), in_offsets.begin());
    std::vector<uint64_t> tpacked(m);
    {
      std::vector<int64_t> cursor(in_offsets.begin(), in_offsets.end() - 1);
      for (int64_t u = 0; u < n; u++) {
        for (int64_t j = out_offsets[u]; j < out_offsets[u + 1]; j++) {
          tpacked[cursor[out_neighbors[j]]++] =
              detail::PackAdj(static_cast<NodeId>(u),
                              static_cast<uint32_t>(j));
        }
      }
    }
    in_neighbors.resize(m);
    if (el.weighted)
      in_weights.resize(m);
#pragma omp parallel for schedule(dynamic, 64)
    for (int64_t v = 0; v < n; v++) {
      auto begin = tpacked.begin() + in_offsets[v];
      auto end = tpacked.begin() + in_offsets[v + 1];
      std::sort(begin, end);
      for (int64_t j = in_offsets[v]; j < in_offsets[v + 1]; j++) {
        in_neighbors[j] = detail::PackedNeighbor(tpacked[j]);
        if (el.weighted)
          in_weights[j] = out_weights[detail::PackedOrigin(tpacked[j])];
      }
    }
  }

  CsrGraph g(out_directed, el.weighted, n, std::move(out_offsets),
             std::move(out_neighbors), std::move(out_weights),
             std::move(in_offsets), std::move(in_neighbors),
             std::move(in_weights));

  if (!out_directed && !symmetrize) {
    // Caller claimed the list was already symmetric; make sure it was.
    if (auto msg = g.CheckInvariants())
      throw BuildError("undirected build from asymmetric input: " + *msg);
  }
  return g;
}

// Relabels an undirected graph so ids follow non-increasing degree order,
// ties broken by ascending original id. The returned graph is isomorphic to
// the input under perm.new_id_of.
inline RelabelResult RelabelByDegree(const CsrGraph& g) {
  if (g.directed())
    throw ConfigError("relabel_by_degree expects an undirected graph");
  const int64_t n = g.num_nodes();

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    int64_t da = g.out_degree(a);
    int64_t db = g.out_degree(b);
    if (da != db)
      return da > db;
    return a < b;
  });

  Permutation perm;
  perm.new_id_of.resize(n);
  for (int64_t rank = 0; rank < n; rank++)
    perm.new_id_of[order[rank]] = static_cast<NodeId>(rank);

  std::vector<int64_t> offsets(n + 1, 0);
  for (int64_t rank = 0; rank < n; rank++)
    offsets[rank + 1] = offsets[rank] + g.out_degree(order[rank]);
  const int64_t m = offsets[n];

  std::vector<NodeId> neighbors(m);
  std::vector<EdgeWeight> weights(g.weighted() ? m : 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t rank = 0; rank < n; rank++) {
    NodeId old_id = order[rank];
    if (!g.weighted()) {
      int64_t pos = offsets[rank];
      for (NodeId v : g.out_neigh(old_id))
        neighbors[pos++] = perm.new_id_of[v];
      std::sort(neighbors.begin() + offsets[rank],
                neighbors.begin() + offsets[rank + 1]);
    } else {
      auto old_neigh = g.out_neigh(old_id);
      auto old_wts = g.out_edge_weights(old_id);
      std::vector<std::pair<NodeId, EdgeWeight>> adj(old_neigh.size());
      for (size_t k = 0; k < old_neigh.size(); k++)
        adj[k] = {perm.new_id_of[old_neigh[k]], old_wts[k]};
      std::sort(adj.begin(), adj.end());
      int64_t pos = offsets[rank];
      for (auto [v, w] : adj) {
        neighbors[pos] = v;
        weights[pos] = w;
        pos++;
      }
    }
  }

  return {CsrGraph(false, g.weighted(), n, std::move(offsets),
                   std::move(neighbors), std::move(weights)),
          std::move(perm)};
}

// Inverse of building: directed graphs yield every stored edge, undirected
// graphs yield each edge once (u < v). Rebuilding with the matching flags
// reproduces the graph.
inline EdgeList FlattenToEdgeList(const CsrGraph& g) {
  EdgeList el;
  el.weighted = g.weighted();
  el.node_count = g.num_nodes();
  for (NodeId u = 0; u < g.num_nodes(); u++) {
    auto neigh = g.out_neigh(u);
    for (size_t k = 0; k < neigh.size(); k++) {
      NodeId v = neigh[k];
      if (!g.directed() && v < u)
        continue;
      if (g.weighted())
        el.Add(u, v, g.out_edge_weights(u)[k]);
      else
        el.Add(u, v);
    }
  }
  return el;
}

}  // namespace gapkit

#endif  // GAPKIT_BUILDER_HPP_
