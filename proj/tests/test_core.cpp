#include <doctest.h>

#include <algorithm>

#include "cplanar/core.hpp"
#include "cplanar/cycle_tools.hpp"
#include "cplanar/instance_io.hpp"
#include "generators.hpp"

using namespace cplanar;

namespace {

ClusteredGraph graph_of(const char* text) { return parse_instance(text).graph; }

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.problems.begin(), r.problems.end(),
                     [&](const std::string& p) { return p.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate accepts a flat triangle") {
  const auto g = graph_of("vertices 1 2 3\nedge 1 1 2\nedge 2 2 3\nedge 3 3 1\ntree (root (A 1) (B 2 3))\n");
  CHECK(validate(g).ok());
}

TEST_CASE("validate reports orphan leaves and dangling endpoints") {
  ClusteredGraph g;
  g.vertices = {1, 2};
  g.edges = {{1, 1, 5}};
  g.tree.add_leaf(0, 1);
  g.tree.add_leaf(0, 2);
  g.tree.add_leaf(0, 7);
  const auto r = validate(g);
  CHECK_FALSE(r.ok());
  CHECK(mentions(r, "orphan leaf 7"));
  CHECK(mentions(r, "dangling endpoint 5"));
}

TEST_CASE("validate reports empty clusters and missing leaves") {
  ClusteredGraph g;
  g.vertices = {1, 2};
  g.tree.add_leaf(0, 1);
  g.tree.add_cluster(0, "E");
  const auto r = validate(g);
  CHECK(mentions(r, "empty cluster"));
  CHECK(mentions(r, "missing leaf for vertex 2"));
  CHECK_THROWS_AS(require_valid(g), InvalidInstance);
}

TEST_CASE("classify two clusters joined by an edge") {
  const auto g = graph_of("vertices 1 2\nedge 1 1 2\ntree (root (A 1) (B 2))\n");
  const auto c = classify(g);
  CHECK(c.flat);
  CHECK(c.two_clustered);
  CHECK(c.c_connected);
  CHECK_FALSE(c.cyclic_clustered);
  CHECK(c.gt_shape == GtShape::Path);
  CHECK(c.cluster_count == 2);
}

TEST_CASE("classify the nine-vertex monotone cycle") {
  const auto c = classify(to_clustered_graph({3, {3, 1, 2, 3, 1, 2, 3, 1, 2}}));
  CHECK(c.cyclic_clustered);
  CHECK(c.gt_shape == GtShape::Cycle);
  CHECK(c.cluster_count == 3);
  CHECK_FALSE(c.two_clustered);
}

TEST_CASE("classify a disconnected cluster") {
  const auto g = graph_of("vertices 1 2 3\nedge 1 1 3\nedge 2 2 3\ntree (root (A 1 2) (B 3))\n");
  CHECK_FALSE(classify(g).c_connected);
  CHECK_FALSE(is_c_connected(g));
}

TEST_CASE("classify nested and star shaped instances") {
  const auto nested = graph_of("vertices 1 2 3\nedge 1 1 2\ntree (root (A (B 1 2) 3))\n");
  CHECK_FALSE(classify(nested).flat);
  const auto star = graph_of(
      "vertices 1 2 3 4\nedge 1 1 2\nedge 2 1 3\nedge 3 1 4\ntree (root (A 1) (B 2) (C 3) (D 4))\n");
  CHECK(classify(star).gt_shape == GtShape::Tree);
  const auto split = graph_of("vertices 1 2\ntree (root (A 1) (B 2))\n");
  CHECK(classify(split).gt_shape == GtShape::Other);
}

TEST_CASE("simplify removes loops and parallel edges") {
  const auto g = graph_of("vertices 1 2 3\nedge 4 1 2\nedge 2 2 1\nedge 3 3 3\ntree (root 1 2 3)\n");
  const auto s = simplify(g);
  REQUIRE(s.graph.edges.size() == 1);
  CHECK(s.graph.edges[0].id == 2);
  CHECK(s.verdict == EdgeBound::Pass);
}

TEST_CASE("simplify edge bound") {
  const auto k4 = graph_of(
      "vertices 1 2 3 4\nedge 1 1 2\nedge 2 1 3\nedge 3 1 4\nedge 4 2 3\nedge 5 2 4\nedge 6 3 4\n"
      "tree (root (A 1 2) (B 3 4))\n");
  CHECK(simplify(k4).verdict == EdgeBound::Pass);

  ClusteredGraph many;
  many.vertices = {1, 2, 3};
  for (int i = 0; i < 10; ++i) many.edges.push_back({i + 1, 1 + i % 3, 1 + (i + 1) % 3});
  for (VertexId v : many.vertices) many.tree.add_leaf(0, v);
  const auto s = simplify(many);
  CHECK(s.graph.edges.size() == 3);
  CHECK(s.verdict == EdgeBound::Pass);

  ClusteredGraph empty;
  CHECK(simplify(empty).verdict == EdgeBound::Pass);
}

TEST_CASE("contraction of intra-cluster edges") {
  SUBCASE("a single edge merges into the smaller id") {
    const auto g = graph_of("vertices 1 2 3\nedge 1 1 2\nedge 2 2 3\ntree (root (A 1 2) (B 3))\n");
    const auto h = contract_intra_cluster_edges(g);
    CHECK(h.vertices == std::vector<VertexId>{1, 3});
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0] == Edge{2, 1, 3});
    CHECK(h.tree.leaves_under(h.cluster_of(1)) == std::vector<VertexId>{1});
  }
  SUBCASE("a path collapses without loops") {
    const auto g = graph_of("vertices 1 2 3\nedge 1 1 2\nedge 2 2 3\ntree (root (A 1 2 3))\n");
    const auto h = contract_intra_cluster_edges(g);
    CHECK(h.vertices == std::vector<VertexId>{1});
    CHECK(h.edges.empty());
  }
  SUBCASE("a triangle keeps one loop") {
    const auto g = graph_of("vertices 1 2 3\nedge 1 1 2\nedge 2 2 3\nedge 3 3 1\ntree (root (A 1 2 3))\n");
    const auto h = contract_intra_cluster_edges(g);
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0].is_loop());
  }
  SUBCASE("no intra-cluster edges is the identity") {
    const auto g = graph_of("vertices 1 2\nedge 1 1 2\ntree (root (A 1) (B 2))\n");
    const auto h = contract_intra_cluster_edges(g);
    CHECK(h.vertices == g.vertices);
    CHECK(h.edges == g.edges);
    CHECK(h.tree == g.tree);
  }
  SUBCASE("non-flat input is rejected") {
    const auto g = graph_of("vertices 1 2\nedge 1 1 2\ntree (root (A (B 1 2)))\n");
    CHECK_THROWS_AS(contract_intra_cluster_edges(g), InvalidInstance);
  }
}

TEST_CASE("property: generators produce valid instances and contraction is idempotent") {
  testing::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    testing::RandomGraphSpec spec;
    spec.max_depth = 1 + i % 3;
    spec.multigraph = i % 2 == 0;
    const auto g = testing::random_clustered_graph(rng, spec);
    REQUIRE(validate(g).ok());
    const auto s = simplify(g);
    CHECK(validate(s.graph).ok());
    const auto before = classify(g), after = classify(s.graph);
    CHECK(before.flat == after.flat);
    CHECK(before.two_clustered == after.two_clustered);
    CHECK(before.cluster_count == after.cluster_count);
    CHECK(before.c_connected == after.c_connected);
    CHECK(before.gt_shape == after.gt_shape);
    if (before.flat) {
      const auto once = contract_intra_cluster_edges(g);
      CHECK(validate(once).ok());
      const auto twice = contract_intra_cluster_edges(once);
      CHECK(twice.vertices == once.vertices);
      CHECK(twice.edges == once.edges);
      CHECK(twice.tree == once.tree);
    }
  }
}
