// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#include <catch2/catch.hpp>

#include <omp.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "test_helpers.hpp"

using namespace gapkit;
using namespace gapkit::test;

namespace {

// Runs fn under each worker count and requires byte-identical edge output.
template <typename Fn>
void CheckWorkerInvariance(Fn fn) {
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  EdgeList serial = fn();
  omp_set_num_threads(8);
  EdgeList parallel = fn();
  omp_set_num_threads(saved);
  REQUIRE(serial.edges == parallel.edges);
  REQUIRE(serial.weights == parallel.weights);
}

}  // namespace

TEST_CASE("uniform generator count and range", "[generator]") {
  GenSpec spec{GenKind::kUniformRandom, 4, 16, kDefaultSeed};
  EdgeList el = GenerateUniform(spec);
  REQUIRE(el.size() == 256);
  REQUIRE(el.node_count == 16);
  for (const Edge& e : el.edges) {
    CHECK(e.src < 16);
    CHECK(e.dst < 16);
  }
}

TEST_CASE("kronecker generator count and range", "[generator]") {
  GenSpec spec{GenKind::kKronecker, 4, 16, kDefaultSeed};
  EdgeList el = GenerateKronecker(spec);
  REQUIRE(el.size() == 256);
  for (const Edge& e : el.edges) {
    CHECK(e.src < 16);
    CHECK(e.dst < 16);
  }
}

TEST_CASE("generation is invariant to worker count", "[generator]") {
  CheckWorkerInvariance([] {
    return GenerateUniform({GenKind::kUniformRandom, 10, 16, 7});
  });
  CheckWorkerInvariance([] {
    return GenerateKronecker({GenKind::kKronecker, 10, 16, 7});
  });
  CheckWorkerInvariance([] {
    return AssignWeights(GenerateUniform({GenKind::kUniformRandom, 10, 16, 7}),
                         7);
  });
}

TEST_CASE("same seed reproduces, different seed does not", "[generator]") {
  GenSpec spec{GenKind::kKronecker, 8, 16, 42};
  EdgeList a = GenerateKronecker(spec);
  EdgeList b = GenerateKronecker(spec);
  REQUIRE(a.edges == b.edges);
  spec.seed = 43;
  EdgeList c = GenerateKronecker(spec);
  CHECK(a.edges != c.edges);
}

TEST_CASE("uniform endpoints are statistically uniform", "[generator]") {
  const int scale = 16;
  const int64_t n = int64_t{1} << scale;
  EdgeList el = GenerateUniform({GenKind::kUniformRandom, scale, 16, 1});
  std::vector<int64_t> hits(n, 0);
  for (const Edge& e : el.edges) {
    hits[e.src]++;
    hits[e.dst]++;
  }
  const double draws = 2.0 * static_cast<double>(el.size());
  const double p = 1.0 / static_cast<double>(n);
  const double mean = draws * p;
  const double sigma = std::sqrt(draws * p * (1 - p));
  for (int64_t v = 0; v < n; v++) {
    REQUIRE(static_cast<double>(hits[v]) > mean - 5 * sigma);
    REQUIRE(static_cast<double>(hits[v]) < mean + 5 * sigma);
  }
}

TEST_CASE("kronecker first quadrant frequency matches A", "[generator]") {
  const int scale = 16;
  EdgeList el = GenerateKronecker({GenKind::kKronecker, scale, 16, 1});
  REQUIRE(el.size() >= 100000);
  const NodeId top_bit = NodeId{1} << (scale - 1);
  int64_t both_zero = 0;
  for (const Edge& e : el.edges) {
    if (!(e.src & top_bit) && !(e.dst & top_bit))
      both_zero++;
  }
  double fraction =
      static_cast<double>(both_zero) / static_cast<double>(el.size());
  CHECK(fraction == Approx(0.57).margin(0.02));
}

TEST_CASE("kronecker graphs are degree-skewed", "[generator]") {
  CsrGraph g = Kron(16);
  int64_t max_degree = 0;
  for (NodeId v = 0; static_cast<int64_t>(v) < g.num_nodes(); v++)
    max_degree = std::max(max_degree, g.out_degree(v));
  double avg_degree =
      static_cast<double>(g.num_edges()) / static_cast<double>(g.num_nodes());
  CHECK(static_cast<double>(max_degree) > 20.0 * avg_degree);
}

TEST_CASE("weights are uniform over [1, 255]", "[generator]") {
  EdgeList el =
      AssignWeights(GenerateUniform({GenKind::kUniformRandom, 13, 16, 3}), 3);
  REQUIRE(el.weighted);
  REQUIRE(el.weights.size() == el.edges.size());
  REQUIRE(el.weights.size() >= 100000);
  double sum = 0;
  for (EdgeWeight w : el.weights) {
    REQUIRE(w >= 1);
    REQUIRE(w <= 255);
    sum += w;
  }
  double sample_mean = sum / static_cast<double>(el.weights.size());
  CHECK(sample_mean == Approx(128.0).margin(2.0));

  EdgeList again =
      AssignWeights(GenerateUniform({GenKind::kUniformRandom, 13, 16, 3}), 3);
  CHECK(el.weights == again.weights);
}

TEST_CASE("weight assignment rejects weighted input", "[generator]") {
  EdgeList el = MakeWeightedEdgeList({{0, 1, 4}});
  CHECK_THROWS_AS(AssignWeights(el, 1), ConfigError);
}

TEST_CASE("symmetrized builds share one weight per undirected edge",
          "[generator]") {
  CsrGraph g = Urand(8, 16, 5, true);
  for (NodeId u = 0; static_cast<int64_t>(u) < g.num_nodes(); u++) {
    auto neigh = g.out_neigh(u);
    auto wts = g.out_edge_weights(u);
    for (size_t k = 0; k < neigh.size(); k++) {
      NodeId v = neigh[k];
      auto v_neigh = g.out_neigh(v);
      auto pos = std::lower_bound(v_neigh.begin(), v_neigh.end(), u);
      REQUIRE(pos != v_neigh.end());
      REQUIRE(*pos == u);
      CHECK(g.out_edge_weights(v)[pos - v_neigh.begin()] == wts[k]);
    }
  }
}

TEST_CASE("generator input validation", "[generator]") {
  CHECK_THROWS_AS(GenerateUniform({GenKind::kUniformRandom, 32, 16, 1}),
                  ConfigError);
  CHECK_THROWS_AS(GenerateUniform({GenKind::kKronecker, 4, 16, 1}),
                  ConfigError);
  CHECK_THROWS_AS(GenerateKronecker({GenKind::kKronecker, 4, 0, 1}),
                  ConfigError);
}
