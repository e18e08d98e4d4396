#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "cplanar/cycle_tools.hpp"
#include "cplanar/instance_io.hpp"
#include "cplanar/switch_solver.hpp"
#include "generators.hpp"
#include "reference.hpp"

using namespace cplanar;

namespace {

ClusteredGraph graph_of(const char* text) { return parse_instance(text).graph; }

SwitchSystem system_of(const ClusteredGraph& g) {
  return build_system(g, initial_parity_vector(g, dfs_circle_order(g)));
}

std::set<std::string> described(const ClusteredGraph& g, const std::vector<Switch>& ss) {
  std::set<std::string> out;
  for (const Switch& s : ss) out.insert(describe(s, g));
  return out;
}

std::vector<bool> bits_of(const BitVector& b) {
  std::vector<bool> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = b[i];
  return out;
}

}  // namespace

TEST_CASE("allowed switches of an inter-cluster edge") {
  const auto g = graph_of("vertices 1 2 3\nedge 1 1 3\ntree (root (A 1 2) (B 3))\n");
  CHECK(described(g, allowed_switches(g)) == std::set<std::string>{"(e1,v2)", "(e1,C:A)", "(e1,C:B)"});
}

TEST_CASE("an intra-cluster edge has no allowed switches") {
  const auto g = graph_of("vertices 1 2 3\nedge 1 1 2\ntree (root (A 1 2) (B 3))\n");
  CHECK(allowed_switches(g).empty());
}

TEST_CASE("with three clusters every cluster can be passed") {
  const auto g = graph_of("vertices 1 2 3\nedge 1 1 2\ntree (root (A 1) (B 2) (C 3))\n");
  const auto s = described(g, allowed_switches(g));
  CHECK(s == std::set<std::string>{"(e1,C:A)", "(e1,C:B)", "(e1,C:C)"});
}

TEST_CASE("switch rules hold on random trees") {
  testing::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    testing::RandomGraphSpec spec;
    spec.max_depth = 3;
    const auto g = testing::random_clustered_graph(rng, spec);
    const auto ss = allowed_switches(g);
    std::set<std::tuple<int, std::size_t, int>> seen;
    for (const Switch& s : ss) {
      CHECK(seen.insert({static_cast<int>(s.kind), s.edge_index, s.target}).second);
      const Edge& e = g.edges[s.edge_index];
      const auto path = g.tree.path(g.tree.leaf_of(e.u), g.tree.leaf_of(e.v));
      const NodeId node = s.kind == SwitchKind::EdgeVertex ? g.tree.leaf_of(s.target) : s.target;
      CHECK(std::find(path.begin(), path.end(), g.tree.node(node).parent) != path.end());
      if (s.kind == SwitchKind::EdgeVertex) CHECK_FALSE(e.touches(s.target));
    }
  }
}

TEST_CASE("system sizes") {
  SUBCASE("no independent pairs") {
    const auto g = graph_of("vertices 1 2 3\nedge 1 1 2\nedge 2 2 3\ntree (root (A 1 2) (B 3))\n");
    const auto sys = system_of(g);
    CHECK(sys.equation_count() == 0);
    REQUIRE(solve(sys).has_value());
    CHECK(solve(sys)->empty());
  }
  SUBCASE("crossed quadrilateral") {
    const auto g = graph_of(
        "vertices 1 2 3 4\nedge 1 1 2\nedge 2 2 3\nedge 3 3 4\nedge 4 4 1\ntree (root (A 1 3) (B 2 4))\n");
    const auto sys = system_of(g);
    CHECK(sys.equation_count() == 2);
    CHECK(sys.rhs.bits[0] == 1);
    CHECK(sys.rhs.bits[1] == 0);
  }
  SUBCASE("nine-vertex cycle") {
    const auto sys = system_of(to_clustered_graph(generate_counterexample(3, 3)));
    CHECK(sys.equation_count() == 27);
  }
}

TEST_CASE("solving") {
  SUBCASE("zero right-hand side gives the empty witness") {
    const auto g = graph_of(
        "vertices 1 2 3 4\nedge 1 1 2\nedge 2 2 3\nedge 3 3 4\nedge 4 4 1\ntree (root (A 1 2) (B 3 4))\n");
    const auto sys = system_of(g);
    REQUIRE(sys.rhs.all_zero());
    CHECK(solve(sys) == std::optional<WitnessSet>{WitnessSet{}});
  }
  SUBCASE("the nine-vertex cycle is solvable") {
    const auto sys = system_of(to_clustered_graph(generate_counterexample(3, 3)));
    const auto w = solve(sys);
    REQUIRE(w.has_value());
    CHECK(apply_switches(sys.rhs, *w, sys).all_zero());
  }
  SUBCASE("K4 with four pendant vertices is unsolvable") {
    const auto g = graph_of(
        "vertices 1 2 3 4 5 6 7 8\n"
        "edge 1 1 2\nedge 2 1 3\nedge 3 1 4\nedge 4 2 3\nedge 5 2 4\nedge 6 3 4\n"
        "edge 7 1 5\nedge 8 2 6\nedge 9 3 7\nedge 10 4 8\n"
        "tree (root (A 1 2 3 4) (B 5 6 7 8))\n");
    const auto sys = system_of(g);
    CHECK_FALSE(solve(sys).has_value());
    CHECK_FALSE(testing::reference_solvable(sys));
  }
}

TEST_CASE("applying switches") {
  const auto g = graph_of(
      "vertices 1 2 3 4\nedge 1 1 2\nedge 2 2 3\nedge 3 3 4\nedge 4 4 1\ntree (root (A 1 3) (B 2 4))\n");
  const auto sys = system_of(g);
  CHECK(apply_switches(sys.rhs, {}, sys).bits == sys.rhs.bits);
  REQUIRE(sys.variable_count() > 0);
  CHECK(apply_switches(sys.rhs, {0, 0}, sys).bits == sys.rhs.bits);
  CHECK_THROWS_AS(apply_switches(sys.rhs, {sys.variable_count()}, sys), std::out_of_range);
  const auto w = solve(sys);
  REQUIRE(w.has_value());
  CHECK(apply_switches(sys.rhs, *w, sys).all_zero());
}

TEST_CASE("build_system rejects a foreign parity vector") {
  const auto g = graph_of("vertices 1 2 3 4\nedge 1 1 2\nedge 2 3 4\ntree (root (A 1 2) (B 3 4))\n");
  ParityVector bad;
  CHECK_THROWS_AS(build_system(g, bad), std::invalid_argument);
}

TEST_CASE("property: rows match their definition and cluster rows are sums") {
  testing::Rng rng(5);
  for (int i = 0; i < 150; ++i) {
    testing::RandomGraphSpec spec;
    spec.max_vertices = 9;
    spec.max_depth = 1 + i % 3;
    const auto g = simplify(testing::random_clustered_graph(rng, spec)).graph;
    const auto sys = system_of(g);
    const PairIndex& pairs = sys.rhs.index;
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
      for (VertexId v : g.vertices)
        CHECK(bits_of(edge_vertex_row(g, pairs, ei, v)) == testing::reference_row(g, pairs, ei, v));
    for (std::size_t j = 0; j < sys.variable_count(); ++j) {
      const Switch& s = sys.variables[j];
      std::vector<bool> expected(pairs.size(), false);
      const auto members = s.kind == SwitchKind::EdgeVertex ? std::vector<VertexId>{s.target}
                                                            : g.tree.leaves_under(s.target);
      for (VertexId v : members) {
        const auto r = testing::reference_row(g, pairs, s.edge_index, v);
        for (std::size_t k = 0; k < r.size(); ++k) expected[k] = expected[k] != r[k];
      }
      CHECK(bits_of(sys.rows[j]) == expected);
    }
    const int clusters = static_cast<int>(g.tree.clusters().size());
    CHECK(sys.equation_count() == pairs.size());
    CHECK(sys.variable_count() <= g.edges.size() * (g.vertices.size() + static_cast<std::size_t>(clusters)));
  }
}

TEST_CASE("property: solver agrees with reference elimination and is order independent") {
  testing::Rng rng(6);
  int solvable = 0, unsolvable = 0;
  for (int i = 0; i < 300; ++i) {
    testing::RandomGraphSpec spec;
    spec.max_vertices = 8;
    spec.edge_probability = 0.3 + 0.1 * (i % 5);
    spec.max_depth = 1 + i % 2;
    const auto g = simplify(testing::random_clustered_graph(rng, spec)).graph;
    const auto sys = system_of(g);
    const auto w = solve(sys);
    CHECK(w.has_value() == testing::reference_solvable(sys));
    if (w) {
      ++solvable;
      CHECK(apply_switches(sys.rhs, *w, sys).all_zero());
    } else {
      ++unsolvable;
    }
    std::vector<std::size_t> perm(sys.variable_count());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 5; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto p = permute_variables(sys, perm);
      const auto pw = solve(p);
      CHECK(pw.has_value() == w.has_value());
      if (pw) CHECK(apply_switches(p.rhs, *pw, p).all_zero());
    }
  }
  CHECK(solvable > 0);
  CHECK(unsolvable > 0);
}
