// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_KERNELS_PAGERANK_HPP_
#define GAPKIT_KERNELS_PAGERANK_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "gapkit/errors.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// Classical iterative PageRank with updates in the pull direction: each
// vertex reads the contributions of its incoming neighbors, so no atomics
// are needed. Contributions are snapshotted per iteration (scores[u] /
// out_degree(u)), and iteration stops once the L1 change between successive
// score vectors drops below tolerance. That is the same quantity the
// push-direction verifier measures, and one further iteration can only
// shrink it by
// the damping factor. Hitting max_iters first is reported, not hidden.
struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-4;
  int max_iters = 20;
};

struct PageRankResult {
  ScoreArray scores;
  int iterations = 0;
  double final_error = 0;
  bool converged = false;
};

inline PageRankResult PageRank(const CsrGraph& g,
                               const PageRankOptions& opts = {}) {
  const int64_t n = g.num_nodes();
  if (n < 1)
    throw ConfigError("pagerank requires a non-empty graph");

  const Score init_score = 1.0f / static_cast<Score>(n);
  const Score base_score =
      (1.0f - static_cast<Score>(opts.damping)) / static_cast<Score>(n);
  const Score damping = static_cast<Score>(opts.damping);

  PageRankResult result;
  result.scores.assign(n, init_score);
  ScoreArray& scores = result.scores;
  ScoreArray outgoing_contrib(n);

  for (int iter = 0; iter < opts.max_iters; iter++) {
#pragma omp parallel for
    for (int64_t v = 0; v < n; v++) {
      int64_t out_deg = g.out_degree(static_cast<NodeId>(v));
      outgoing_contrib[v] =
          out_deg > 0 ? scores[v] / static_cast<Score>(out_deg) : 0.0f;
    }
    double error = 0;
#pragma omp parallel for reduction(+ : error) schedule(dynamic, 64)
    for (int64_t u = 0; u < n; u++) {
      Score incoming_total = 0;
      for (NodeId v : g.in_neigh(static_cast<NodeId>(u)))
        incoming_total += outgoing_contrib[v];
      Score old_score = scores[u];
      scores[u] = base_score + damping * incoming_total;
      error += std::fabs(scores[u] - old_score);
    }
    result.iterations = iter + 1;
    result.final_error = error;
    if (error < opts.tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

}  // namespace gapkit

#endif  // GAPKIT_KERNELS_PAGERANK_HPP_
