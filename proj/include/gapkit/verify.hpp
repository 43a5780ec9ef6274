// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_VERIFY_HPP_
#define GAPKIT_VERIFY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <queue>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gapkit/graph.hpp"
#include "gapkit/types.hpp"

namespace gapkit {

// Independent correctness checkers, one per kernel. Each oracle is serial
// and uses different bookkeeping than the kernel it checks (depth oracle for
// BFS, Dijkstra for delta-stepping, push direction for pull PageRank,
// per-label traversals for hooking/shortcutting, predecessor lists for the
// successor bitmap, plain set intersection for ordered counting). Verifiers
// never mutate their inputs; failures are reported, not thrown.

struct VerifyReport {
  bool ok = true;
  std::string failure_detail;
};

namespace detail {

inline VerifyReport Fail(std::string detail) {
  return {false, std::move(detail)};
}

// Serial BFS depths; -1 means unreached.
inline std::vector<int32_t> BfsDepths(const CsrGraph& g, NodeId source) {
  std::vector<int32_t> depth(g.num_nodes(), -1);
  std::vector<NodeId> to_visit;
  to_visit.reserve(g.num_nodes());
  depth[source] = 0;
  to_visit.push_back(source);
  for (size_t qi = 0; qi < to_visit.size(); qi++) {
    NodeId u = to_visit[qi];
    for (NodeId v : g.out_neigh(u)) {
      if (depth[v] == -1) {
        depth[v] = depth[u] + 1;
        to_visit.push_back(v);
      }
    }
  }
  return depth;
}

}  // namespace detail

inline VerifyReport VerifyBfs(const CsrGraph& g, NodeId source,
                              const ParentArray& tree) {
  const int64_t n = g.num_nodes();
  if (static_cast<int64_t>(tree.size()) != n)
    return detail::Fail("parent array has wrong length");
  if (tree[source] != static_cast<ParentEntry>(source))
    return detail::Fail("parent[source] != source at vertex " +
                        std::to_string(source));
  std::vector<int32_t> depth = detail::BfsDepths(g, source);
  for (int64_t v = 0; v < n; v++) {
    const bool reached = depth[v] != -1;
    if (!reached) {
      if (tree[v] != -1)
        return detail::Fail("unreachable vertex " + std::to_string(v) +
                            " has parent " + std::to_string(tree[v]));
      continue;
    }
    if (v == static_cast<int64_t>(source))
      continue;
    ParentEntry p = tree[v];
    if (p < 0)
      return detail::Fail("reachable vertex " + std::to_string(v) +
                          " marked unreached");
    if (p >= n)
      return detail::Fail("parent id out of range at vertex " +
                          std::to_string(v));
    NodeId parent = static_cast<NodeId>(p);
    if (!g.HasOutEdge(parent, static_cast<NodeId>(v)))
      return detail::Fail("no edge (" + std::to_string(parent) + "," +
                          std::to_string(v) + ") for claimed parent");
    if (depth[parent] != depth[v] - 1)
      return detail::Fail("parent of vertex " + std::to_string(v) +
                          " has depth " + std::to_string(depth[parent]) +
                          ", expected " + std::to_string(depth[v] - 1));
  }
  return {};
}

inline VerifyReport VerifySssp(const CsrGraph& g, NodeId source,
                               const DistanceArray& dist) {
  const int64_t n = g.num_nodes();
  if (static_cast<int64_t>(dist.size()) != n)
    return detail::Fail("distance array has wrong length");
  // Serial Dijkstra. Integer weights mean the comparison is exact: every
  // implementation adds weights in the same order along a shortest path.
  std::vector<Distance> oracle(n, kDistanceInf);
  oracle[source] = 0;
  using DistNode = std::pair<Distance, NodeId>;
  std::priority_queue<DistNode, std::vector<DistNode>, std::greater<>> pq;
  pq.push({0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != oracle[u])
      continue;
    auto neigh = g.out_neigh(u);
    auto wts = g.out_edge_weights(u);
    for (size_t k = 0; k < neigh.size(); k++) {
      Distance nd = d + wts[k];
      if (nd < oracle[neigh[k]]) {
        oracle[neigh[k]] = nd;
        pq.push({nd, neigh[k]});
      }
    }
  }
  for (int64_t v = 0; v < n; v++) {
    if (dist[v] != oracle[v])
      return detail::Fail("distance mismatch at vertex " + std::to_string(v) +
                          ": got " + std::to_string(dist[v]) + ", expected " +
                          std::to_string(oracle[v]));
  }
  return {};
}

inline VerifyReport VerifyPageRank(const CsrGraph& g, const ScoreArray& scores,
                                   double tolerance = 1e-4,
                                   double damping = 0.85) {
  const int64_t n = g.num_nodes();
  if (static_cast<int64_t>(scores.size()) != n)
    return detail::Fail("score array has wrong length");
  // One serial push-direction iteration from the given scores.
  const double base_score = (1.0 - damping) / static_cast<double>(n);
  std::vector<double> incoming_sums(n, 0.0);
  for (int64_t u = 0; u < n; u++) {
    int64_t out_deg = g.out_degree(static_cast<NodeId>(u));
    if (out_deg == 0)
      continue;
    double contrib =
        static_cast<double>(scores[u]) / static_cast<double>(out_deg);
    for (NodeId v : g.out_neigh(static_cast<NodeId>(u)))
      incoming_sums[v] += contrib;
  }
  double total_change = 0;
  for (int64_t v = 0; v < n; v++)
    total_change +=
        std::fabs(base_score + damping * incoming_sums[v] - scores[v]);
  if (total_change >= tolerance)
    return detail::Fail("one further iteration changes scores by " +
                        std::to_string(total_change) + " >= tolerance " +
                        std::to_string(tolerance));
  return {};
}

inline VerifyReport VerifyComponents(const CsrGraph& g,
                                     const LabelArray& comp) {
  const int64_t n = g.num_nodes();
  if (static_cast<int64_t>(comp.size()) != n)
    return detail::Fail("label array has wrong length");
  // One traversal per distinct label, from an arbitrary representative. A
  // split component trips the foreign-label check; merged labels leave one
  // of the components unreached.
  std::unordered_map<NodeId, NodeId> label_to_rep;
  for (int64_t v = 0; v < n; v++)
    label_to_rep[comp[v]] = static_cast<NodeId>(v);
  std::vector<char> visited(n, 0);
  std::vector<NodeId> frontier;
  frontier.reserve(n);
  for (auto [label, rep] : label_to_rep) {
    frontier.clear();
    frontier.push_back(rep);
    visited[rep] = 1;
    for (size_t qi = 0; qi < frontier.size(); qi++) {
      NodeId u = frontier[qi];
      auto visit = [&](NodeId v) -> VerifyReport {
        if (comp[v] != label)
          return detail::Fail("vertex " + std::to_string(v) + " labeled " +
                              std::to_string(comp[v]) +
                              " reached from label " + std::to_string(label));
        if (!visited[v]) {
          visited[v] = 1;
          frontier.push_back(v);
        }
        return {};
      };
      for (NodeId v : g.out_neigh(u)) {
        if (auto r = visit(v); !r.ok)
          return r;
      }
      if (g.directed()) {
        for (NodeId v : g.in_neigh(u)) {
          if (auto r = visit(v); !r.ok)
            return r;
        }
      }
    }
  }
  for (int64_t v = 0; v < n; v++) {
    if (!visited[v])
      return detail::Fail("vertex " + std::to_string(v) +
                          " unreached by its label's traversal");
  }
  return {};
}

inline VerifyReport VerifyBetweenness(const CsrGraph& g,
                                      std::span<const NodeId> sources,
                                      const ScoreArray& scores,
                                      double tolerance = 1e-4) {
  const int64_t n = g.num_nodes();
  if (static_cast<int64_t>(scores.size()) != n)
    return detail::Fail("score array has wrong length");
  // Serial Brandes with explicit predecessor lists (no successor bitmap),
  // same sources, same max normalization.
  std::vector<double> total(n, 0.0);
  for (NodeId source : sources) {
    std::vector<double> sigma(n, 0.0);
    std::vector<int32_t> depth(n, -1);
    std::vector<std::vector<NodeId>> preds(n);
    std::vector<NodeId> order;
    order.reserve(n);
    sigma[source] = 1;
    depth[source] = 0;
    order.push_back(source);
    for (size_t qi = 0; qi < order.size(); qi++) {
      NodeId u = order[qi];
      for (NodeId v : g.out_neigh(u)) {
        if (depth[v] == -1) {
          depth[v] = depth[u] + 1;
          order.push_back(v);
        }
        if (depth[v] == depth[u] + 1) {
          sigma[v] += sigma[u];
          preds[v].push_back(u);
        }
      }
    }
    std::vector<double> delta(n, 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (NodeId v : preds[w])
        delta[v] += (sigma[v] / sigma[w]) * (1 + delta[w]);
      if (w != source)
        total[w] += delta[w];
    }
  }
  double max_score = *std::max_element(total.begin(), total.end());
  if (max_score > 0) {
    for (double& s : total)
      s /= max_score;
  }
  for (int64_t v = 0; v < n; v++) {
    double diff = std::fabs(total[v] - static_cast<double>(scores[v]));
    if (diff >= tolerance)
      return detail::Fail("score mismatch at vertex " + std::to_string(v) +
                          ": got " + std::to_string(scores[v]) +
                          ", expected " + std::to_string(total[v]));
  }
  return {};
}

inline VerifyReport VerifyTriangles(const CsrGraph& g, uint64_t count) {
  const int64_t n = g.num_nodes();
  // Every ordered adjacent pair contributes its full neighborhood
  // intersection, counting each triangle six times.
  uint64_t six_count = 0;
  std::vector<NodeId> common;
  for (int64_t u = 0; u < n; u++) {
    auto u_neigh = g.out_neigh(static_cast<NodeId>(u));
    for (NodeId v : u_neigh) {
      auto v_neigh = g.out_neigh(v);
      common.clear();
      std::set_intersection(u_neigh.begin(), u_neigh.end(), v_neigh.begin(),
                            v_neigh.end(), std::back_inserter(common));
      six_count += common.size();
    }
  }
  uint64_t expected = six_count / 6;
  if (count != expected)
    return detail::Fail("triangle count mismatch: got " +
                        std::to_string(count) + ", expected " +
                        std::to_string(expected));
  return {};
}

}  // namespace gapkit

#endif  // GAPKIT_VERIFY_HPP_
