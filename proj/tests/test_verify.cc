// Copyright (c) 2026, the gapkit authors
// See LICENSE.txt for license details

#include <catch2/catch.hpp>

#include <vector>

#include "test_helpers.hpp"

using namespace gapkit;
using namespace gapkit::test;

TEST_CASE("bfs verifier accepts a correct tree and rejects tampering",
          "[verify]") {
  CsrGraph g = PathGraph(3);
  ParentArray good = {0, 0, 1};
  CHECK(VerifyBfs(g, 0, good).ok);

  SECTION("claimed parent without an edge") {
    ParentArray bad = good;
    bad[2] = 0;  // no edge (0,2)
    VerifyReport r = VerifyBfs(g, 0, bad);
    REQUIRE_FALSE(r.ok);
    CHECK_THAT(r.failure_detail, Catch::Contains("no edge"));
    CHECK_THAT(r.failure_detail, Catch::Contains("2"));
  }
  SECTION("reachable vertex marked unreached") {
    ParentArray bad = good;
    bad[2] = -1;
    VerifyReport r = VerifyBfs(g, 0, bad);
    REQUIRE_FALSE(r.ok);
    CHECK_THAT(r.failure_detail, Catch::Contains("unreached"));
  }
  SECTION("unreachable vertex given a parent") {
    CsrGraph h = BuildUndirected({{0, 1}}, 3);
    ParentArray bad = {0, 0, 1};
    VerifyReport r = VerifyBfs(h, 0, bad);
    REQUIRE_FALSE(r.ok);
  }
  SECTION("wrong source parent") {
    ParentArray bad = good;
    bad[0] = 1;
    CHECK_FALSE(VerifyBfs(g, 0, bad).ok);
  }
  SECTION("wrong depth parent") {
    // Square 0-1-2-3-0: both 1 and 3 are valid parents of 2, but 0 is not
    // even though the edge (0,3)... (0,1) exist; use 2's non-neighbor 0.
    CsrGraph square = BuildUndirected({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    ParentArray tree = Bfs(square, 0);
    REQUIRE(VerifyBfs(square, 0, tree).ok);
    ParentArray bad = tree;
    bad[1] = 2;  // edge exists, but depth(2) != depth(1) - 1
    VerifyReport r = VerifyBfs(square, 0, bad);
    REQUIRE_FALSE(r.ok);
    CHECK_THAT(r.failure_detail, Catch::Contains("depth"));
  }
}

TEST_CASE("sssp verifier pinpoints a wrong distance", "[verify]") {
  EdgeList el = MakeWeightedEdgeList({{0, 1, 10}, {0, 2, 1}, {2, 1, 2}});
  CsrGraph g = BuildCsr(el, true, false);
  DistanceArray good = {0, 3, 1};
  CHECK(VerifySssp(g, 0, good).ok);

  DistanceArray bad = good;
  bad[1] += 1;
  VerifyReport r = VerifySssp(g, 0, bad);
  REQUIRE_FALSE(r.ok);
  CHECK_THAT(r.failure_detail, Catch::Contains("vertex 1"));
}

TEST_CASE("pagerank verifier checks the one-iteration bound", "[verify]") {
  CsrGraph cycle = BuildUndirected({{0, 1}});
  ScoreArray fixed_point = {0.5f, 0.5f};
  CHECK(VerifyPageRank(cycle, fixed_point).ok);

  CsrGraph g = Kron(8);
  ScoreArray uniform(g.num_nodes(),
                     1.0f / static_cast<float>(g.num_nodes()));
  VerifyReport r = VerifyPageRank(g, uniform);
  REQUIRE_FALSE(r.ok);
  CHECK_THAT(r.failure_detail, Catch::Contains("tolerance"));
}

TEST_CASE("components verifier catches merged and split labels", "[verify]") {
  CsrGraph g = BuildUndirected({{0, 1}, {2, 3}});
  LabelArray good = {0, 0, 2, 2};
  CHECK(VerifyComponents(g, good).ok);

  SECTION("merged components leave unreached vertices") {
    LabelArray merged = {0, 0, 0, 0};
    VerifyReport r = VerifyComponents(g, merged);
    REQUIRE_FALSE(r.ok);
    CHECK_THAT(r.failure_detail, Catch::Contains("unreached"));
  }
  SECTION("a split component hits a foreign label") {
    CsrGraph path = PathGraph(3);
    LabelArray split = {0, 0, 2};
    VerifyReport r = VerifyComponents(path, split);
    REQUIRE_FALSE(r.ok);
    CHECK_THAT(r.failure_detail, Catch::Contains("label"));
  }
}

TEST_CASE("betweenness verifier flags a perturbed score", "[verify]") {
  CsrGraph star = StarGraph(5, 4);
  std::vector<NodeId> sources = {0, 1, 2, 3, 4};
  ScoreArray good = {0.0f, 0.0f, 0.0f, 0.0f, 1.0f};
  CHECK(VerifyBetweenness(star, sources, good).ok);

  ScoreArray bad = good;
  bad[2] += 0.01f;
  VerifyReport r = VerifyBetweenness(star, sources, bad);
  REQUIRE_FALSE(r.ok);
  CHECK_THAT(r.failure_detail, Catch::Contains("vertex 2"));
}

TEST_CASE("triangle verifier divides its six-fold count", "[verify]") {
  CHECK(VerifyTriangles(CompleteGraph(3), 1).ok);
  VerifyReport r = VerifyTriangles(CompleteGraph(4), 3);
  REQUIRE_FALSE(r.ok);
  CHECK_THAT(r.failure_detail, Catch::Contains("expected 4"));
}
