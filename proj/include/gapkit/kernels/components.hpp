// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_KERNELS_COMPONENTS_HPP_
#define GAPKIT_KERNELS_COMPONENTS_HPP_

#include <cstdint>
#include <numeric>

#include "gapkit/atomics.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// Shiloach-Vishkin connected components: alternating hooking and shortcut
// phases until a fixed point. Hooking inspects each stored edge and, when
// the endpoints' labels differ, lowers the higher label's root with an
// atomic minimum; shortcutting compresses every label chain. Edge direction
// is ignored by the hook, so directed graphs come out weakly connected, and
// zero-degree vertices simply keep their initial labels. Labels only ever
// decrease, so the fixed point labels each component with its minimum
// vertex id regardless of scheduling.
inline LabelArray ShiloachVishkin(const CsrGraph& g) {
  const int64_t n = g.num_nodes();
  LabelArray comp(n);
#pragma omp parallel for
  for (int64_t v = 0; v < n; v++)
    comp[v] = static_cast<NodeId>(v);

  bool change = true;
  while (change) {
    change = false;
#pragma omp parallel for reduction(|| : change) schedule(dynamic, 1024)
    for (int64_t u = 0; u < n; u++) {
      for (NodeId v : g.out_neigh(static_cast<NodeId>(u))) {
        NodeId comp_u = AtomicLoad(comp[u]);
        NodeId comp_v = AtomicLoad(comp[v]);
        if (comp_u == comp_v)
          continue;
        NodeId high_comp = comp_u > comp_v ? comp_u : comp_v;
        NodeId low_comp = comp_u + comp_v - high_comp;
        // Hook only roots so chains stay shallow for the shortcut phase.
        if (AtomicLoad(comp[high_comp]) == high_comp) {
          if (FetchMin(comp[high_comp], low_comp))
            change = true;
        }
      }
    }
#pragma omp parallel for schedule(static, 2048)
    for (int64_t v = 0; v < n; v++) {
      while (true) {
        NodeId c = AtomicLoad(comp[v]);
        NodeId cc = AtomicLoad(comp[c]);
        if (c == cc)
          break;
        AtomicStore(comp[v], cc);
      }
    }
  }
  return comp;
}

}  // namespace gapkit

#endif  // GAPKIT_KERNELS_COMPONENTS_HPP_
