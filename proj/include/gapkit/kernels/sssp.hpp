// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_KERNELS_SSSP_HPP_
#define GAPKIT_KERNELS_SSSP_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "gapkit/atomics.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// Delta-stepping single-source shortest paths.
//
// Vertices are radix-sorted by tentative distance into bins of width delta.
// The bins live in thread-local storage, so inserts need no atomics and the
// containers can grow with ordinary resizes. Work sharing happens through a
// single shared bin: each iteration every thread copies its local bin for
// the current minimum distance range into the shared array (one fetch-add
// per bulk copy), and all threads then process the shared bin together. A
// vertex is never removed from older bins; stale entries are skipped by
// checking that the vertex's distance still lies at or above the current
// range. Distances are exact for any delta >= 1; delta only shifts work
// between iterations.
inline DistanceArray DeltaStepping(const CsrGraph& g, NodeId source,
                                   EdgeWeight delta = 1) {
  const int64_t n = g.num_nodes();
  if (!g.weighted())
    throw ConfigError("sssp requires a weighted graph");
  if (static_cast<int64_t>(source) >= n)
    throw ConfigError("sssp source out of range");
  if (delta < 1)
    throw ConfigError("sssp delta must be >= 1");
  for (EdgeWeight w : g.out_weights()) {
    if (w <= 0)
      throw ConfigError("sssp requires positive edge weights");
  }

  constexpr size_t kMaxBin = std::numeric_limits<size_t>::max() / 2;
  DistanceArray dist(n, kDistanceInf);
  dist[source] = 0;
  std::vector<NodeId> frontier(g.num_edges() + n + 1);
  frontier[0] = source;
  // Double-buffered shared state: slot iter&1 is current, the other is next.
  size_t shared_indexes[2] = {0, kMaxBin};
  size_t frontier_tails[2] = {1, 0};
  bool overflow = false;

#pragma omp parallel
  {
    std::vector<std::vector<NodeId>> local_bins;
    size_t iter = 0;
    while (shared_indexes[iter & 1] != kMaxBin && !AtomicLoad(overflow)) {
      size_t& curr_bin_index = shared_indexes[iter & 1];
      size_t& next_bin_index = shared_indexes[(iter + 1) & 1];
      size_t& curr_frontier_tail = frontier_tails[iter & 1];
      size_t& next_frontier_tail = frontier_tails[(iter + 1) & 1];
      const int64_t curr_bin_weight =
          static_cast<int64_t>(delta) * static_cast<int64_t>(curr_bin_index);
#pragma omp for nowait schedule(dynamic, 64)
      for (size_t i = 0; i < curr_frontier_tail; i++) {
        NodeId u = frontier[i];
        Distance u_dist = AtomicLoad(dist[u]);
        if (u_dist >= curr_bin_weight) {
          auto neigh = g.out_neigh(u);
          auto wts = g.out_edge_weights(u);
          for (size_t k = 0; k < neigh.size(); k++) {
            NodeId v = neigh[k];
            Distance new_dist = u_dist + wts[k];
            if (FetchMin(dist[v], new_dist)) {
              size_t dest_bin = static_cast<size_t>(new_dist) / delta;
              if (dest_bin >= local_bins.size())
                local_bins.resize(dest_bin + 1);
              local_bins[dest_bin].push_back(v);
            }
          }
        }
      }
      // Vote for the smallest non-empty bin.
      for (size_t b = curr_bin_index; b < local_bins.size(); b++) {
        if (!local_bins[b].empty()) {
          FetchMin(next_bin_index, b);
          break;
        }
      }
#pragma omp barrier
#pragma omp single nowait
      {
        curr_bin_index = kMaxBin;
        curr_frontier_tail = 0;
      }
      if (next_bin_index < local_bins.size() &&
          !local_bins[next_bin_index].empty()) {
        auto& bin = local_bins[next_bin_index];
        size_t copy_start = FetchAdd(next_frontier_tail, bin.size());
        if (copy_start + bin.size() > frontier.size()) {
          CompareAndSwap(overflow, false, true);
        } else {
          std::copy(bin.begin(), bin.end(), frontier.begin() + copy_start);
        }
        bin.clear();
      }
      iter++;
#pragma omp barrier
    }
  }
  if (overflow)
    throw Error("sssp shared frontier overflow");
  return dist;
}

}  // namespace gapkit

#endif  // GAPKIT_KERNELS_SSSP_HPP_
