// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_GENERATOR_HPP_
#define GAPKIT_GENERATOR_HPP_

#include <algorithm>
#include <cstdint>
#include <utility>

#include "gapkit/edge_list.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/rng.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// Synthetic graph generation. Both generators emit exactly
// avg_degree * 2^scale directed edge tuples; undirectedness comes from
// symmetrizing at build time. Edge indices are partitioned into fixed blocks
// of 1024 and a keyed counter generator is re-seeded per (seed, block), so
// the emitted tuple sequence depends only on the GenSpec, never on how many
// workers produced it.

enum class GenKind { kKronecker, kUniformRandom };

struct GenSpec {
  GenKind kind;
  int scale;                     // n = 2^scale
  int avg_degree = 16;           // edge factor
  uint64_t seed = kDefaultSeed;
};

inline constexpr int64_t kGenBlockSize = 1024;

// Kronecker quadrant probabilities (A, B, C, implicit D = 0.05).
inline constexpr double kKronA = 0.57;
inline constexpr double kKronB = 0.19;
inline constexpr double kKronC = 0.19;

namespace detail {

enum : uint64_t { kEdgeStream = 0, kWeightStream = uint64_t{1} << 56 };

inline void ValidateGenSpec(const GenSpec& spec, GenKind expected) {
  if (spec.kind != expected)
    throw ConfigError("generator called with mismatched GenSpec kind");
  if (spec.scale < 0 || spec.scale > 31)
    throw ConfigError("generator scale must be in [0, 31]");
  if (spec.avg_degree < 1)
    throw ConfigError("generator avg_degree must be >= 1");
}

}  // namespace detail

inline EdgeList GenerateUniform(const GenSpec& spec) {
  detail::ValidateGenSpec(spec, GenKind::kUniformRandom);
  const int64_t n = int64_t{1} << spec.scale;
  const int64_t num_edges = spec.avg_degree * n;
  const uint32_t bound = static_cast<uint32_t>(n);

  EdgeList el;
  el.node_count = n;
  el.edges.resize(num_edges);
  const int64_t num_blocks = (num_edges + kGenBlockSize - 1) / kGenBlockSize;
#pragma omp parallel for schedule(static)
  for (int64_t block = 0; block < num_blocks; block++) {
    Rng rng(spec.seed, detail::kEdgeStream | static_cast<uint64_t>(block));
    const int64_t end = std::min(num_edges, (block + 1) * kGenBlockSize);
    for (int64_t i = block * kGenBlockSize; i < end; i++) {
      NodeId src = rng.NextBounded(bound);
      NodeId dst = rng.NextBounded(bound);
      el.edges[i] = {src, dst};
    }
  }
  return el;
}

inline EdgeList GenerateKronecker(const GenSpec& spec) {
  detail::ValidateGenSpec(spec, GenKind::kKronecker);
  const int64_t n = int64_t{1} << spec.scale;
  const int64_t num_edges = spec.avg_degree * n;

  EdgeList el;
  el.node_count = n;
  el.edges.resize(num_edges);
  const int64_t num_blocks = (num_edges + kGenBlockSize - 1) / kGenBlockSize;
#pragma omp parallel for schedule(static)
  for (int64_t block = 0; block < num_blocks; block++) {
    Rng rng(spec.seed, detail::kEdgeStream | static_cast<uint64_t>(block));
    const int64_t end = std::min(num_edges, (block + 1) * kGenBlockSize);
    for (int64_t i = block * kGenBlockSize; i < end; i++) {
      NodeId src = 0;
      NodeId dst = 0;
      for (int depth = 0; depth < spec.scale; depth++) {
        double point = rng.NextUnit();
        src <<= 1;
        dst <<= 1;
        if (point < kKronA + kKronB) {
          if (point > kKronA)
            dst |= 1;
        } else {
          src |= 1;
          if (point > kKronA + kKronB + kKronC)
            dst |= 1;
        }
      }
      el.edges[i] = {src, dst};
    }
  }
  return el;
}

// Gives every edge a weight uniform in [1, 255]. Weight of edge i is fixed
// by (seed, i), so parallel assignment and symmetrized rebuilds (which copy
// the original's weight to the mirror direction) stay deterministic.
inline EdgeList AssignWeights(EdgeList el, uint64_t seed = kDefaultSeed) {
  if (el.weighted)
    throw ConfigError("assign_weights called on an already weighted list");
  const int64_t num_edges = static_cast<int64_t>(el.edges.size());
  el.weights.resize(num_edges);
  const int64_t num_blocks = (num_edges + kGenBlockSize - 1) / kGenBlockSize;
#pragma omp parallel for schedule(static)
  for (int64_t block = 0; block < num_blocks; block++) {
    Rng rng(seed, detail::kWeightStream | static_cast<uint64_t>(block));
    const int64_t end = std::min(num_edges, (block + 1) * kGenBlockSize);
    for (int64_t i = block * kGenBlockSize; i < end; i++)
      el.weights[i] = 1 + static_cast<EdgeWeight>(rng.NextBounded(255));
  }
  el.weighted = true;
  return el;
}

}  // namespace gapkit

#endif  // GAPKIT_GENERATOR_HPP_
