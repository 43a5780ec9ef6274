// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

// Command-line driver. One subcommand per kernel runs it under its default
// trial schedule; `suite` runs all six kernels; `convert` caches any
// supported input format as a serialized .sg/.wsg graph.

#include <omp.h>

#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gapkit/gapkit.hpp"

namespace {

using namespace gapkit;

struct GraphOpts {
  std::string file;
  int kron_scale = -1;
  int urand_scale = -1;
  int degree = 16;
  bool symmetrize = false;
  uint64_t seed = kDefaultSeed;
  int threads = 0;
  std::string output;
};

struct KernelOpts {
  int trials = -1;          // -n; -1 keeps the kernel's default
  int64_t fixed_source = -1;  // -r
  EdgeWeight delta = 1;     // -d (sssp)
  int iters = -1;           // -i (pr max iterations / bc sources per trial)
  double tolerance = 1e-4;  // -t (pr)
  bool verify = false;      // -v
};

void AddGraphOptions(CLI::App* cmd, GraphOpts& o) {
  cmd->add_option("-f,--file", o.file,
                  "input graph file (.el .wel .graph .mtx .sg .wsg)");
  cmd->add_option("-g,--kron", o.kron_scale,
                  "generate a Kronecker graph with 2^scale vertices");
  cmd->add_option("-u,--urand", o.urand_scale,
                  "generate a uniform random graph with 2^scale vertices");
  cmd->add_option("-k,--degree", o.degree,
                  "average degree for generated graphs")
      ->capture_default_str();
  cmd->add_flag("-s,--symmetrize", o.symmetrize,
                "treat the input as undirected");
  cmd->add_option("--seed", o.seed,
                  "seed for generation, weights, and source selection")
      ->capture_default_str();
  cmd->add_option("--threads", o.threads,
                  "worker count (falls back to GAPKIT_THREADS, then OpenMP)");
  cmd->add_option("-o,--output", o.output,
                  "write the machine-readable trial report to this file");
}

void ApplyThreads(const GraphOpts& o) {
  int threads = o.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("GAPKIT_THREADS"))
      threads = std::atoi(env);
  }
  if (threads > 0)
    omp_set_num_threads(threads);
}

// Builds or loads the configured graph (untimed). Generated graphs are
// undirected, so they are always built with symmetrization.
std::pair<CsrGraph, std::string> LoadConfiguredGraph(const GraphOpts& o) {
  const int source_count =
      (!o.file.empty()) + (o.kron_scale >= 0) + (o.urand_scale >= 0);
  if (source_count != 1)
    throw ConfigError("exactly one graph source required (-f, -g, or -u)");
  if (!o.file.empty()) {
    std::string name = std::filesystem::path(o.file).stem().string();
    return {LoadGraph(o.file, o.symmetrize), name};
  }
  if (o.kron_scale >= 0) {
    EdgeList el = GenerateKronecker(
        {GenKind::kKronecker, o.kron_scale, o.degree, o.seed});
    return {BuildCsr(el, false, true), "kron" + std::to_string(o.kron_scale)};
  }
  EdgeList el = GenerateUniform(
      {GenKind::kUniformRandom, o.urand_scale, o.degree, o.seed});
  return {BuildCsr(el, false, true), "urand" + std::to_string(o.urand_scale)};
}

BenchPlan MakePlan(Kernel kernel, const GraphOpts& go, const KernelOpts& ko,
                   const CsrGraph& g) {
  BenchPlan plan = BenchPlan::Default(kernel);
  plan.source_seed = go.seed;
  if (ko.trials >= 0)
    plan.trials = ko.trials;
  if (ko.fixed_source >= 0) {
    if (ko.fixed_source >= g.num_nodes())
      throw ConfigError("-r source out of range");
    if (g.out_degree(static_cast<NodeId>(ko.fixed_source)) == 0)
      throw ConfigError("-r source has zero out-degree");
    plan.fixed_source = static_cast<NodeId>(ko.fixed_source);
  }
  plan.delta = ko.delta;
  plan.tolerance = ko.tolerance;
  if (ko.iters >= 0) {
    if (kernel == Kernel::kBetweenness)
      plan.sources_per_trial = ko.iters;
    else
      plan.max_iters = ko.iters;
  }
  return plan;
}

void EmitReports(const GraphOpts& go, std::span<const BenchReport> reports) {
  if (!go.output.empty()) {
    std::ofstream out(go.output);
    if (!out)
      throw ConfigError("cannot open output file: " + go.output);
    WriteCsvHeader(out);
    for (const BenchReport& r : reports)
      WriteCsv(out, r);
  } else {
    WriteCsvHeader(std::cout);
    for (const BenchReport& r : reports)
      WriteCsv(std::cout, r);
  }
  WriteSummaryTable(std::cout, reports);
}

int RunKernelCommand(Kernel kernel, const GraphOpts& go,
                     const KernelOpts& ko) {
  ApplyThreads(go);
  auto [g, name] = LoadConfiguredGraph(go);
  if (kernel == Kernel::kSssp)
    g = EnsureWeighted(std::move(g), go.seed);
  if (kernel == Kernel::kTriangleCount ||
      (kernel == Kernel::kComponents && g.directed()))
    g = EnsureUndirected(std::move(g));
  BenchPlan plan = MakePlan(kernel, go, ko, g);
  BenchReport report = RunBenchmark(g, plan, ko.verify, name);
  EmitReports(go, {&report, 1});
  return ko.verify && !report.AllVerified() ? 1 : 0;
}

int RunSuiteCommand(const GraphOpts& go, const KernelOpts& ko) {
  ApplyThreads(go);
  auto [base, name] = LoadConfiguredGraph(go);
  CsrGraph weighted = EnsureWeighted(base, go.seed);
  std::optional<CsrGraph> undirected;
  if (base.directed())
    undirected = EnsureUndirected(base);
  const CsrGraph& und = undirected ? *undirected : base;

  std::vector<BenchReport> reports;
  bool all_ok = true;
  auto run = [&](Kernel kernel, const CsrGraph& g) {
    BenchPlan plan = MakePlan(kernel, go, ko, g);
    reports.push_back(RunBenchmark(g, plan, ko.verify, name));
    all_ok = all_ok && reports.back().AllVerified();
  };
  run(Kernel::kBfs, base);
  run(Kernel::kSssp, weighted);
  run(Kernel::kPageRank, base);
  run(Kernel::kComponents, und);
  run(Kernel::kBetweenness, base);
  run(Kernel::kTriangleCount, und);
  EmitReports(go, reports);
  return ko.verify && !all_ok ? 1 : 0;
}

int RunConvertCommand(const GraphOpts& go) {
  ApplyThreads(go);
  if (go.file.empty() || go.output.empty())
    throw ConfigError("convert needs -f <input> and -o <output>");
  GraphFileFormat out_fmt = FormatFromPath(go.output);
  if (out_fmt != GraphFileFormat::kSerialized &&
      out_fmt != GraphFileFormat::kSerializedWeighted)
    throw ConfigError("convert writes .sg or .wsg files");
  CsrGraph g = LoadGraph(go.file, go.symmetrize);
  if (out_fmt == GraphFileFormat::kSerializedWeighted && !g.weighted()) {
    g = EnsureWeighted(std::move(g), go.seed);
  } else if (out_fmt == GraphFileFormat::kSerialized && g.weighted()) {
    std::cerr << "convert: dropping weights for .sg output\n";
    EdgeList el = FlattenToEdgeList(g);
    el.weighted = false;
    el.weights.clear();
    g = BuildCsr(el, g.directed(), !g.directed());
  }
  WriteSerialized(g, go.output);
  std::cout << "wrote " << go.output << " (n=" << g.num_nodes()
            << ", m=" << g.num_edges() << (g.directed() ? ", directed" : "")
            << (g.weighted() ? ", weighted" : "") << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gapkit graph benchmark suite"};
  app.require_subcommand(1);

  struct Command {
    CLI::App* cmd;
    GraphOpts graph;
    KernelOpts kernel;
  };
  // CLI11 binds option variables by address; deque keeps them stable.
  std::deque<std::pair<Kernel, Command>> kernel_cmds;

  auto add_kernel = [&](Kernel k, const char* desc) -> Command& {
    kernel_cmds.push_back({k, Command{app.add_subcommand(KernelName(k), desc),
                                      {}, {}}});
    Command& c = kernel_cmds.back().second;
    AddGraphOptions(c.cmd, c.graph);
    c.cmd->add_option("-n,--trials", c.kernel.trials, "number of trials");
    c.cmd->add_option("-r,--source", c.kernel.fixed_source,
                      "use this source vertex for every trial");
    c.cmd->add_flag("-v,--verify", c.kernel.verify,
                    "verify every trial's output");
    return c;
  };

  Command& bfs = add_kernel(Kernel::kBfs,
                            "direction-optimizing breadth-first search");
  (void)bfs;
  Command& sssp = add_kernel(Kernel::kSssp,
                             "delta-stepping single-source shortest paths");
  sssp.cmd->add_option("-d,--delta", sssp.kernel.delta,
                       "delta-stepping bucket width")
      ->capture_default_str();
  Command& pr = add_kernel(Kernel::kPageRank, "pull-direction PageRank");
  pr.cmd->add_option("-i,--max-iters", pr.kernel.iters,
                     "iteration cap (default 20)");
  pr.cmd->add_option("-t,--tolerance", pr.kernel.tolerance,
                     "L1 convergence tolerance")
      ->capture_default_str();
  add_kernel(Kernel::kComponents, "Shiloach-Vishkin connected components");
  Command& bc = add_kernel(Kernel::kBetweenness,
                           "Brandes betweenness centrality approximation");
  bc.cmd->add_option("-i,--bc-sources", bc.kernel.iters,
                     "sources per trial (default 4)");
  add_kernel(Kernel::kTriangleCount, "ordered triangle counting");

  Command suite{app.add_subcommand("suite",
                                   "run all six kernels with their default "
                                   "trial schedules"),
                {}, {}};
  AddGraphOptions(suite.cmd, suite.graph);
  suite.cmd->add_option("-d,--delta", suite.kernel.delta,
                        "delta-stepping bucket width")
      ->capture_default_str();
  suite.cmd->add_option("-i,--max-iters", suite.kernel.iters,
                        "PageRank iteration cap");
  suite.cmd->add_option("-t,--tolerance", suite.kernel.tolerance,
                        "PageRank tolerance")
      ->capture_default_str();
  suite.cmd->add_flag("-v,--verify", suite.kernel.verify,
                      "verify every trial's output");

  GraphOpts convert_opts;
  CLI::App* convert =
      app.add_subcommand("convert", "serialize a graph to .sg/.wsg");
  AddGraphOptions(convert, convert_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    for (auto& [kernel, c] : kernel_cmds) {
      if (app.got_subcommand(c.cmd))
        return RunKernelCommand(kernel, c.graph, c.kernel);
    }
    if (app.got_subcommand(suite.cmd))
      return RunSuiteCommand(suite.graph, suite.kernel);
    if (app.got_subcommand(convert))
      return RunConvertCommand(convert_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
