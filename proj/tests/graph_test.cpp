#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>

#include "maxcut/graph.hpp"
#include "test_util.hpp"

using namespace maxcut;

TEST_CASE("cut_value on a path graph") {
  Graph g(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(cut_value(g, {+1, -1, +1}) == 2);
  CHECK(cut_value(g, {+1, +1, +1}) == 0);
  CHECK(cut_value(g, {-1, -1, -1}) == 0);
}

TEST_CASE("cut_value rejects dimension mismatch") {
  Graph g(3, {{0, 1, 1}});
  CHECK_THROWS_AS(cut_value(g, {+1, -1}), InvalidArgument);
}

TEST_CASE("graph construction rejects malformed edges") {
  CHECK_THROWS_AS(Graph(3, {{1, 1, 2}}), InvalidArgument);  // self-loop
  CHECK_THROWS_AS(Graph(3, {{0, 3, 1}}), InvalidArgument);  // out of range
  CHECK_THROWS_AS(Graph(3, {{0, 1, 1}, {1, 0, 2}}), InvalidArgument);  // dup
  CHECK_THROWS_AS(Graph(3, {{0, 1, 0}}), InvalidArgument);  // zero weight
}

TEST_CASE("adjacency lists mirror the edge list") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Graph g = testutil::random_graph(rng, 10);
    std::multiset<std::tuple<int, int, std::int64_t>> from_edges, from_adj;
    for (const Edge& e : g.edges()) from_edges.insert({e.u, e.v, e.w});
    for (int v = 0; v < g.n(); ++v)
      for (const auto& nb : g.neighbors(v))
        if (v < nb.to) from_adj.insert({v, nb.to, nb.w});
    CHECK(from_edges == from_adj);
  }
}

TEST_CASE("cut_value matches dense-matrix oracle on random graphs") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + int(rng() % 11);
    Graph g = testutil::random_graph(rng, n);
    CutAssignment x = testutil::random_assignment(rng, n);
    CHECK(cut_value(g, x) == testutil::dense_cut_oracle(g, x));
  }
}

TEST_CASE("laplacian of the unit triangle") {
  LaplacianMatrix L = laplacian(testutil::unit_triangle());
  const std::vector<std::int64_t> want = {2, -1, -1, -1, 2, -1, -1, -1, 2};
  CHECK(L.entries() == want);
}

TEST_CASE("laplacian of an edgeless graph is zero") {
  LaplacianMatrix L = laplacian(Graph(4, {}));
  for (std::int64_t v : L.entries()) CHECK(v == 0);
}

TEST_CASE("quad_form hand cases") {
  CHECK(quad_form(LaplacianMatrix(3), {+1, +1, -1}) == 0);
  LaplacianMatrix L = laplacian(testutil::unit_triangle());
  CHECK(quad_form(L, {+1, +1, -1}) == 8);
}

TEST_CASE("Laplacian identity and structure on random graphs") {
  std::mt19937_64 rng(1234);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + int(rng() % 12);
    Graph g = testutil::random_graph(rng, n);
    LaplacianMatrix L = laplacian(g);
    L.validate();  // symmetric, zero row sums
    for (int k = 0; k < 100; ++k) {
      CutAssignment x = testutil::random_assignment(rng, n);
      CHECK(quad_form(L, x) == 4 * cut_value(g, x));
    }
  }
}

TEST_CASE("global spin flip leaves the cut unchanged") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + int(rng() % 12);
    Graph g = testutil::random_graph(rng, n);
    CutAssignment x = testutil::random_assignment(rng, n);
    CutAssignment neg = x;
    for (auto& s : neg) s = -s;
    CHECK(cut_value(g, x) == cut_value(g, neg));
  }
}

TEST_CASE("cut_delta basics") {
  Graph isolated(2, {});
  CHECK(cut_delta(isolated, {+1, -1}, 0) == 0);
  Graph single(2, {{0, 1, 7}});
  CHECK(cut_delta(single, {+1, +1}, 0) == 7);
  CHECK_THROWS_AS(cut_delta(single, {+1, +1}, 2), InvalidArgument);
}

TEST_CASE("cut_delta matches full recompute on 1000 random triples") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + int(rng() % 14);
    Graph g = testutil::random_graph(rng, n);
    CutAssignment x = testutil::random_assignment(rng, n);
    const int i = int(rng() % n);
    CutAssignment flipped = x;
    flipped[i] = -flipped[i];
    CHECK(cut_delta(g, x, i) == cut_value(g, flipped) - cut_value(g, x));
  }
}
