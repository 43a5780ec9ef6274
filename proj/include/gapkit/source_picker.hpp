// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_SOURCE_PICKER_HPP_
#define GAPKIT_SOURCE_PICKER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "gapkit/errors.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/rng.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// Deterministic selector of benchmark source vertices. Draws uniformly over
// [0, n) and rejects zero out-degree vertices, so the emitted sequence is a
// pure function of (seed, graph). An optional fixed vertex short-circuits
// the draw (the -r flag).
class SourcePicker {
 public:
  explicit SourcePicker(const CsrGraph& g, uint64_t seed = kDefaultSeed,
                        std::optional<NodeId> fixed_source = std::nullopt)
      : graph_(g), rng_(seed), fixed_source_(fixed_source) {
    if (g.num_edges() == 0)
      throw ConfigError("cannot pick sources: graph has no edges");
  }

  NodeId PickNext() {
    if (fixed_source_)
      return *fixed_source_;
    NodeId candidate;
    do {
      candidate = rng_.NextBounded(static_cast<uint32_t>(graph_.num_nodes()));
    } while (graph_.out_degree(candidate) == 0);
    return candidate;
  }

 private:
  const CsrGraph& graph_;
  Rng rng_;
  std::optional<NodeId> fixed_source_;
};

inline std::vector<NodeId> PickSources(const CsrGraph& g, int64_t count,
                                       uint64_t seed = kDefaultSeed) {
  SourcePicker picker(g, seed);
  std::vector<NodeId> sources(count);
  for (int64_t i = 0; i < count; i++)
    sources[i] = picker.PickNext();
  return sources;
}

}  // namespace gapkit

#endif  // GAPKIT_SOURCE_PICKER_HPP_
