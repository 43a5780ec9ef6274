// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_KERNELS_BETWEENNESS_HPP_
#define GAPKIT_KERNELS_BETWEENNESS_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "gapkit/atomics.hpp"
#include "gapkit/bitmap.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/sliding_queue.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// Approximate betweenness centrality over the given source vertices,
// treating the graph as unweighted.
//
// Per source, a level-synchronous forward BFS accumulates shortest-path
// counts (sigma) and marks shortest-path successors as one flag per stored
// edge in a bitmap, O(m) bits instead of per-vertex successor lists. The
// backward pass walks the recorded depth levels from farthest to closest
// and accumulates dependencies:
//     delta(v) = sum over flagged edges (v,w) of sigma(v)/sigma(w) *
//                (1 + delta(w))
// A source's own dependency from its own traversal is excluded (the score
// definition requires s != v != t). After all sources, scores are
// normalized so the maximum equals one.
namespace detail {

// Forward pass; the queue retains every level in place and depth_bounds[d]
// marks where level d starts in its storage.
inline void BrandesForward(const CsrGraph& g, NodeId source,
                           std::vector<double>& path_counts, Bitmap& succ,
                           std::vector<int32_t>& depths,
                           SlidingQueue<NodeId>& queue,
                           std::vector<size_t>& depth_bounds) {
  depths[source] = 0;
  path_counts[source] = 1;
  queue.PushBack(source);
  depth_bounds.push_back(0);
  queue.SlideWindow();
#pragma omp parallel
  {
    int32_t depth = 0;
    QueueBuffer<NodeId> lqueue(queue);
    while (!queue.Empty()) {
      depth++;
#pragma omp for schedule(dynamic, 64) nowait
      for (auto it = queue.begin(); it < queue.end(); ++it) {
        NodeId u = *it;
        const int64_t base = g.out_offset(u);
        auto neigh = g.out_neigh(u);
        for (size_t k = 0; k < neigh.size(); k++) {
          NodeId v = neigh[k];
          if (AtomicLoad(depths[v]) == -1 &&
              CompareAndSwap(depths[v], int32_t{-1}, depth)) {
            lqueue.PushBack(v);
          }
          if (AtomicLoad(depths[v]) == depth) {
            succ.SetBitAtomic(static_cast<size_t>(base) + k);
            FetchAdd(path_counts[v], path_counts[u]);
          }
        }
      }
      lqueue.Flush();
#pragma omp barrier
#pragma omp single
      {
        queue.SlideWindow();
        depth_bounds.push_back(queue.OffsetStart());
      }
    }
  }
}

}  // namespace detail

inline ScoreArray Brandes(const CsrGraph& g, std::span<const NodeId> sources) {
  const int64_t n = g.num_nodes();
  if (sources.empty())
    throw ConfigError("betweenness requires at least one source");
  for (NodeId s : sources) {
    if (static_cast<int64_t>(s) >= n)
      throw ConfigError("betweenness source out of range");
    if (g.out_degree(s) == 0)
      throw ConfigError("betweenness source has zero out-degree");
  }

  ScoreArray scores(n, 0);
  std::vector<double> path_counts(n);
  std::vector<double> deltas(n);
  Bitmap succ(g.num_edges());
  SlidingQueue<NodeId> queue(n);
  std::vector<size_t> depth_bounds;

  for (NodeId source : sources) {
    std::fill(path_counts.begin(), path_counts.end(), 0.0);
    std::vector<int32_t> depths(n, -1);
    depth_bounds.clear();
    queue.Reset();
    succ.Reset();
    detail::BrandesForward(g, source, path_counts, succ, depths, queue,
                           depth_bounds);

    std::fill(deltas.begin(), deltas.end(), 0.0);
    // depth_bounds ends with the empty window that stopped the search, so
    // levels are [depth_bounds[d], depth_bounds[d+1]).
    for (int64_t d = static_cast<int64_t>(depth_bounds.size()) - 2; d >= 0;
         d--) {
#pragma omp parallel for schedule(dynamic, 64)
      for (size_t i = depth_bounds[d]; i < depth_bounds[d + 1]; i++) {
        NodeId u = queue.At(i);
        const int64_t base = g.out_offset(u);
        auto neigh = g.out_neigh(u);
        double delta_u = 0;
        for (size_t k = 0; k < neigh.size(); k++) {
          if (succ.GetBit(static_cast<size_t>(base) + k)) {
            NodeId v = neigh[k];
            delta_u += (path_counts[u] / path_counts[v]) * (1 + deltas[v]);
          }
        }
        deltas[u] = delta_u;
        if (u != source)
          scores[u] += static_cast<Score>(delta_u);
      }
    }
  }

  Score max_score = 0;
#pragma omp parallel for reduction(max : max_score)
  for (int64_t v = 0; v < n; v++)
    max_score = std::max(max_score, scores[v]);
  if (max_score > 0) {
#pragma omp parallel for
    for (int64_t v = 0; v < n; v++)
      scores[v] /= max_score;
  }
  return scores;
}

}  // namespace gapkit

#endif  // GAPKIT_KERNELS_BETWEENNESS_HPP_
