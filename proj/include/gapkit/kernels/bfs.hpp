// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_KERNELS_BFS_HPP_
#define GAPKIT_KERNELS_BFS_HPP_

#include <cstdint>

#include "gapkit/atomics.hpp"
#include "gapkit/bitmap.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/sliding_queue.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// Direction-optimizing breadth-first search producing a parent array.
//
// Top-down steps scan the frontier's out-edges and claim children with a
// compare-and-swap on their parent slot; bottom-up steps let every unvisited
// vertex scan its incoming edges for a frontier parent. The search switches
// down when the frontier's outgoing edge total exceeds the unexplored edge
// count / alpha, and back up when the frontier shrinks below n / beta.
//
// Before the search, each vertex's parent slot is preloaded with its degree
// as a negative number. The convention "any negative value means unvisited"
// still holds, and the degree of a newly reached vertex is then already in
// hand when its slot is checked, which removes the separate pass that would
// otherwise total the frontier's degrees. A final sweep rewrites every
// remaining negative entry to -1.
//
// Strategies other than the default exist for measurement: kTopDownOnly
// keeps the degree encoding but never switches direction; kTopDownRescan
// additionally drops the encoding and totals the next frontier's degrees
// with an extra pass per depth, the way a search without the encoding would.
enum class BfsStrategy { kDirectionOptimizing, kTopDownOnly, kTopDownRescan };

struct BfsOptions {
  int64_t alpha = 15;
  int64_t beta = 18;
  BfsStrategy strategy = BfsStrategy::kDirectionOptimizing;
};

namespace detail {

inline int64_t BfsBottomUpStep(const CsrGraph& g, ParentArray& parent,
                               const Bitmap& front, Bitmap& next) {
  const int64_t n = g.num_nodes();
  int64_t awake_count = 0;
  next.Reset();
#pragma omp parallel for reduction(+ : awake_count) schedule(dynamic, 1024)
  for (int64_t v = 0; v < n; v++) {
    if (parent[v] < 0) {
      for (NodeId u : g.in_neigh(static_cast<NodeId>(v))) {
        if (front.GetBit(u)) {
          parent[v] = static_cast<ParentEntry>(u);
          awake_count++;
          next.SetBit(v);
          break;
        }
      }
    }
  }
  return awake_count;
}

inline int64_t BfsTopDownStep(const CsrGraph& g, ParentArray& parent,
                              SlidingQueue<NodeId>& queue) {
  int64_t scout_count = 0;
#pragma omp parallel
  {
    QueueBuffer<NodeId> lqueue(queue);
#pragma omp for reduction(+ : scout_count) schedule(dynamic, 64) nowait
    for (auto it = queue.begin(); it < queue.end(); ++it) {
      NodeId u = *it;
      for (NodeId v : g.out_neigh(u)) {
        ParentEntry curr_val = AtomicLoad(parent[v]);
        if (curr_val < 0) {
          if (CompareAndSwap(parent[v], curr_val,
                             static_cast<ParentEntry>(u))) {
            lqueue.PushBack(v);
            scout_count += -curr_val;
          }
        }
      }
    }
    lqueue.Flush();
  }
  return scout_count;
}

inline void QueueToBitmap(const SlidingQueue<NodeId>& queue, Bitmap& bm) {
#pragma omp parallel for
  for (auto it = queue.begin(); it < queue.end(); ++it)
    bm.SetBitAtomic(*it);
}

inline void BitmapToQueue(const CsrGraph& g, const Bitmap& bm,
                          SlidingQueue<NodeId>& queue) {
  const int64_t n = g.num_nodes();
#pragma omp parallel
  {
    QueueBuffer<NodeId> lqueue(queue);
#pragma omp for nowait
    for (int64_t v = 0; v < n; v++) {
      if (bm.GetBit(v))
        lqueue.PushBack(static_cast<NodeId>(v));
    }
    lqueue.Flush();
  }
  queue.SlideWindow();
}

}  // namespace detail

inline ParentArray Bfs(const CsrGraph& g, NodeId source,
                       const BfsOptions& opts = {}) {
  const int64_t n = g.num_nodes();
  if (static_cast<int64_t>(source) >= n)
    throw ConfigError("bfs source out of range");
  if (opts.alpha <= 0 || opts.beta <= 0)
    throw ConfigError("bfs alpha and beta must be positive");

  const bool encode_degrees = opts.strategy != BfsStrategy::kTopDownRescan;
  ParentArray parent(n);
#pragma omp parallel for
  for (int64_t v = 0; v < n; v++) {
    int64_t degree = encode_degrees ? g.out_degree(static_cast<NodeId>(v)) : 0;
    parent[v] = degree != 0 ? static_cast<ParentEntry>(-degree) : -1;
  }
  parent[source] = static_cast<ParentEntry>(source);

  SlidingQueue<NodeId> queue(n);
  queue.PushBack(source);
  queue.SlideWindow();
  Bitmap front(n);
  Bitmap next(n);
  int64_t edges_to_check = g.num_edges();
  int64_t scout_count = g.out_degree(source);

  while (!queue.Empty()) {
    if (opts.strategy == BfsStrategy::kDirectionOptimizing &&
        scout_count > edges_to_check / opts.alpha) {
      detail::QueueToBitmap(queue, front);
      int64_t awake_count = queue.Size();
      queue.SlideWindow();
      int64_t old_awake_count;
      do {
        old_awake_count = awake_count;
        awake_count = detail::BfsBottomUpStep(g, parent, front, next);
        front.Swap(next);
      } while (awake_count >= old_awake_count ||
               awake_count > n / opts.beta);
      detail::BitmapToQueue(g, front, queue);
      scout_count = 1;
    } else {
      edges_to_check -= scout_count;
      scout_count = detail::BfsTopDownStep(g, parent, queue);
      queue.SlideWindow();
      if (opts.strategy == BfsStrategy::kTopDownRescan) {
        int64_t frontier_degree_total = 0;
#pragma omp parallel for reduction(+ : frontier_degree_total)
        for (auto it = queue.begin(); it < queue.end(); ++it)
          frontier_degree_total += g.out_degree(*it);
        scout_count = frontier_degree_total;
      }
    }
  }

#pragma omp parallel for
  for (int64_t v = 0; v < n; v++) {
    if (parent[v] < 0)
      parent[v] = -1;
  }
  return parent;
}

}  // namespace gapkit

#endif  // GAPKIT_KERNELS_BFS_HPP_
