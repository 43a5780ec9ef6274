// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#ifndef GAPKIT_BENCHMARK_HPP_
#define GAPKIT_BENCHMARK_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gapkit/builder.hpp"
#include "gapkit/errors.hpp"
#include "gapkit/generator.hpp"
#include "gapkit/graph.hpp"
#include "gapkit/kernels.hpp"
#include "gapkit/source_picker.hpp"
#include "gapkit/timer.hpp"
#include "gapkit/types.hpp"
#include "gapkit/verify.hpp"

namespace gapkit {

// Executes kernels under the benchmark's measurement rules: the graph is
// built or loaded up front and is the only state shared between trials;
// every trial re-allocates its own solution and auxiliary structures inside
// the timed region; any in-kernel graph transformation (the triangle
// kernel's relabel) is likewise timed. Source draws come from one picker
// sequence across the trials of a run.

enum class Kernel { kBfs, kSssp, kPageRank, kComponents, kBetweenness,
                    kTriangleCount };

inline const char* KernelName(Kernel k) {
  switch (k) {
    case Kernel::kBfs: return "bfs";
    case Kernel::kSssp: return "sssp";
    case Kernel::kPageRank: return "pr";
    case Kernel::kComponents: return "cc";
    case Kernel::kBetweenness: return "bc";
    case Kernel::kTriangleCount: return "tc";
  }
  return "?";
}

struct BenchPlan {
  Kernel kernel = Kernel::kBfs;
  int trials = 64;
  int sources_per_trial = 1;  // 0 for whole-graph kernels
  EdgeWeight delta = 1;       // sssp
  double tolerance = 1e-4;    // pr
  int max_iters = 20;         // pr
  int64_t alpha = 15;         // bfs
  int64_t beta = 18;          // bfs
  uint64_t source_seed = kDefaultSeed;
  std::optional<NodeId> fixed_source;

  // Trial schedule defaults: BFS 64x1, SSSP 64x1, PR 16, CC 16, BC 16x4,
  // TC 3.
  static BenchPlan Default(Kernel k) {
    BenchPlan plan;
    plan.kernel = k;
    switch (k) {
      case Kernel::kBfs: plan.trials = 64; plan.sources_per_trial = 1; break;
      case Kernel::kSssp: plan.trials = 64; plan.sources_per_trial = 1; break;
      case Kernel::kPageRank: plan.trials = 16; plan.sources_per_trial = 0;
        break;
      case Kernel::kComponents: plan.trials = 16; plan.sources_per_trial = 0;
        break;
      case Kernel::kBetweenness: plan.trials = 16; plan.sources_per_trial = 4;
        break;
      case Kernel::kTriangleCount: plan.trials = 3; plan.sources_per_trial = 0;
        break;
    }
    return plan;
  }
};

struct TrialResult {
  int trial = 0;
  std::vector<NodeId> sources;
  double seconds = 0;
  std::optional<bool> verified;
  uint64_t digest = 0;
};

struct BenchReport {
  Kernel kernel = Kernel::kBfs;
  std::string graph_name;
  std::vector<TrialResult> trials;
  bool aborted = false;  // a verification failure stopped the run

  double MeanSeconds() const {
    if (trials.empty())
      return 0;
    double sum = 0;
    for (const TrialResult& t : trials)
      sum += t.seconds;
    return sum / static_cast<double>(trials.size());
  }
  double MinSeconds() const {
    double best = trials.empty() ? 0 : trials.front().seconds;
    for (const TrialResult& t : trials)
      best = std::min(best, t.seconds);
    return best;
  }
  double MaxSeconds() const {
    double worst = trials.empty() ? 0 : trials.front().seconds;
    for (const TrialResult& t : trials)
      worst = std::max(worst, t.seconds);
    return worst;
  }
  bool AllVerified() const {
    for (const TrialResult& t : trials) {
      if (t.verified.has_value() && !*t.verified)
        return false;
    }
    return !aborted;
  }
};

inline uint64_t HashBytes(const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 14695981039346656037ULL;
  for (size_t i = 0; i < len; i++) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

// Untimed graph preparation for kernels with stronger input requirements.

inline CsrGraph EnsureWeighted(CsrGraph g, uint64_t seed = kDefaultSeed) {
  if (g.weighted())
    return g;
  const bool directed = g.directed();
  EdgeList el = AssignWeights(FlattenToEdgeList(g), seed);
  return BuildCsr(el, directed, !directed);
}

inline CsrGraph EnsureUndirected(CsrGraph g) {
  if (!g.directed())
    return g;
  return BuildCsr(FlattenToEdgeList(g), false, true);
}

inline BenchReport RunBenchmark(const CsrGraph& g, const BenchPlan& plan,
                                bool verify,
                                const std::string& graph_name = "graph") {
  if (plan.kernel == Kernel::kSssp && !g.weighted())
    throw ConfigError("sssp plan needs a weighted graph (assign weights "
                      "before benchmarking)");
  if (plan.kernel == Kernel::kTriangleCount && g.directed())
    throw ConfigError("tc plan needs an undirected graph (symmetrize before "
                      "benchmarking)");
  if (plan.trials < 0)
    throw ConfigError("negative trial count");

  std::optional<SourcePicker> picker;
  if (plan.sources_per_trial > 0)
    picker.emplace(g, plan.source_seed, plan.fixed_source);

  BenchReport report;
  report.kernel = plan.kernel;
  report.graph_name = graph_name;
  for (int trial = 0; trial < plan.trials; trial++) {
    TrialResult tr;
    tr.trial = trial;
    for (int s = 0; s < plan.sources_per_trial; s++)
      tr.sources.push_back(picker->PickNext());

    Timer timer;
    std::string failure;
    switch (plan.kernel) {
      case Kernel::kBfs: {
        timer.Start();
        ParentArray parent =
            Bfs(g, tr.sources[0], {.alpha = plan.alpha, .beta = plan.beta});
        timer.Stop();
        tr.digest =
            HashBytes(parent.data(), parent.size() * sizeof(ParentEntry));
        if (verify) {
          VerifyReport r = VerifyBfs(g, tr.sources[0], parent);
          tr.verified = r.ok;
          failure = r.failure_detail;
        }
        break;
      }
      case Kernel::kSssp: {
        timer.Start();
        DistanceArray dist = DeltaStepping(g, tr.sources[0], plan.delta);
        timer.Stop();
        tr.digest = HashBytes(dist.data(), dist.size() * sizeof(Distance));
        if (verify) {
          VerifyReport r = VerifySssp(g, tr.sources[0], dist);
          tr.verified = r.ok;
          failure = r.failure_detail;
        }
        break;
      }
      case Kernel::kPageRank: {
        timer.Start();
        PageRankResult res = PageRank(
            g, {.tolerance = plan.tolerance, .max_iters = plan.max_iters});
        timer.Stop();
        tr.digest = HashBytes(res.scores.data(),
                              res.scores.size() * sizeof(Score));
        if (!res.converged) {
          std::cerr << "pagerank: tolerance " << plan.tolerance
                    << " not reached after " << res.iterations
                    << " iterations (residual " << res.final_error << ")\n";
        }
        if (verify) {
          VerifyReport r = VerifyPageRank(g, res.scores, plan.tolerance);
          tr.verified = r.ok;
          failure = r.failure_detail;
        }
        break;
      }
      case Kernel::kComponents: {
        timer.Start();
        LabelArray comp = ShiloachVishkin(g);
        timer.Stop();
        tr.digest = HashBytes(comp.data(), comp.size() * sizeof(NodeId));
        if (verify) {
          VerifyReport r = VerifyComponents(g, comp);
          tr.verified = r.ok;
          failure = r.failure_detail;
        }
        break;
      }
      case Kernel::kBetweenness: {
        timer.Start();
        ScoreArray scores = Brandes(g, tr.sources);
        timer.Stop();
        tr.digest = HashBytes(scores.data(), scores.size() * sizeof(Score));
        if (verify) {
          VerifyReport r = VerifyBetweenness(g, tr.sources, scores);
          tr.verified = r.ok;
          failure = r.failure_detail;
        }
        break;
      }
      case Kernel::kTriangleCount: {
        timer.Start();
        uint64_t count = TriangleCount(g);
        timer.Stop();
        tr.digest = HashBytes(&count, sizeof(count));
        if (verify) {
          VerifyReport r = VerifyTriangles(g, count);
          tr.verified = r.ok;
          failure = r.failure_detail;
        }
        break;
      }
    }
    tr.seconds = timer.Seconds();
    report.trials.push_back(std::move(tr));
    if (verify && report.trials.back().verified == false) {
      std::cerr << KernelName(plan.kernel) << " trial " << trial
                << " failed verification: " << failure << "\n";
      report.aborted = true;
      break;
    }
  }
  return report;
}

// Machine-readable report: one CSV line per trial plus a summary line whose
// trial column reads "summary" and whose elapsed column is the mean.

inline void WriteCsvHeader(std::ostream& os) {
  os << "kernel,graph,trial,source,elapsed_seconds,verified\n";
}

namespace detail {

inline std::string FormatSeconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9f", s);
  return buf;
}

inline std::string JoinSources(const std::vector<NodeId>& sources) {
  std::string joined;
  for (size_t i = 0; i < sources.size(); i++) {
    if (i > 0)
      joined += ';';
    joined += std::to_string(sources[i]);
  }
  return joined;
}

}  // namespace detail

inline void WriteCsv(std::ostream& os, const BenchReport& report) {
  const char* kernel = KernelName(report.kernel);
  for (const TrialResult& tr : report.trials) {
    os << kernel << ',' << report.graph_name << ',' << tr.trial << ','
       << detail::JoinSources(tr.sources) << ','
       << detail::FormatSeconds(tr.seconds) << ',';
    if (tr.verified.has_value())
      os << (*tr.verified ? '1' : '0');
    os << '\n';
  }
  os << kernel << ',' << report.graph_name << ",summary,,"
     << detail::FormatSeconds(report.MeanSeconds()) << ',';
  bool any_verified = false;
  for (const TrialResult& tr : report.trials)
    any_verified |= tr.verified.has_value();
  if (any_verified)
    os << (report.AllVerified() ? '1' : '0');
  os << '\n';
}

inline void WriteSummaryTable(std::ostream& os,
                              std::span<const BenchReport> reports) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-6s %-16s %7s %12s %12s %12s %9s\n",
                "kernel", "graph", "trials", "mean_s", "min_s", "max_s",
                "verified");
  os << buf;
  for (const BenchReport& r : reports) {
    bool any_verified = false;
    for (const TrialResult& tr : r.trials)
      any_verified |= tr.verified.has_value();
    const char* verified =
        !any_verified ? "-" : (r.AllVerified() ? "yes" : "NO");
    std::snprintf(buf, sizeof(buf), "%-6s %-16s %7zu %12.6f %12.6f %12.6f %9s\n",
                  KernelName(r.kernel), r.graph_name.c_str(), r.trials.size(),
                  r.MeanSeconds(), r.MinSeconds(), r.MaxSeconds(), verified);
    os << buf;
  }
}

}  // namespace gapkit

#endif  // GAPKIT_BENCHMARK_HPP_
