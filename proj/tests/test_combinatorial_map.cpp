#include <doctest.h>

#include <algorithm>
#include <set>

#include "cplanar/combinatorial_map.hpp"
#include "generators.hpp"

using namespace cplanar;

namespace {

CombinatorialMap triangle() {
  return CombinatorialMap::from_rotations({1, 2, 3}, {{1, 1, 2}, {2, 2, 3}, {3, 3, 1}},
                                          {{1, {1, 3}}, {2, {2, 1}}, {3, {3, 2}}}, std::pair{1, 1});
}

std::vector<Edge> k4_edges() { return {{1, 1, 2}, {2, 1, 3}, {3, 1, 4}, {4, 2, 3}, {5, 2, 4}, {6, 3, 4}}; }

CombinatorialMap k4(bool planar) {
  std::map<VertexId, std::vector<EdgeId>> rot{
      {1, {2, 3, 1}}, {2, {1, 5, 4}}, {3, {4, 6, 2}}, {4, planar ? std::vector<EdgeId>{3, 6, 5} : std::vector<EdgeId>{3, 5, 6}}};
  return CombinatorialMap::from_rotations({1, 2, 3, 4}, k4_edges(), rot, std::pair{1, 1});
}

std::size_t euler(const CombinatorialMap& m) {
  return m.vertices().size() + m.faces().size() - m.edges().size();
}

}  // namespace

TEST_CASE("face counts") {
  CHECK(triangle().faces().size() == 2);
  CHECK(k4(true).faces().size() == 4);
  const auto path = CombinatorialMap::from_rotations({1, 2, 3}, {{1, 1, 2}, {2, 2, 3}},
                                                     {{1, {1}}, {2, {1, 2}}, {3, {2}}}, std::pair{1, 1});
  const auto fs = path.faces();
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].size() == 4);
  CHECK(fs[0].vertex_set() == std::vector<VertexId>{1, 2, 3});
  CHECK(fs[0].occurrences(2).size() == 2);
}

TEST_CASE("a single vertex has one face without darts") {
  const auto m = CombinatorialMap::from_rotations({5}, {}, {}, std::nullopt);
  const auto fs = m.faces();
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].darts.empty());
  CHECK(fs[0].vertices == std::vector<VertexId>{5});
  CHECK(m.validate().ok());
}

TEST_CASE("validation rejects a non-planar rotation system") {
  const auto bad = k4(false);
  CHECK_FALSE(bad.validate().ok());
  CHECK_THROWS_WITH_AS(bad.require_valid(), doctest::Contains("not a planar embedding"), std::invalid_argument);
  CHECK(k4(true).validate().ok());
}

TEST_CASE("darts and rotations") {
  const auto m = triangle();
  CHECK(m.dart_count() == 6);
  for (Dart d = 0; d < 6; ++d) {
    CHECK(CombinatorialMap::twin(CombinatorialMap::twin(d)) == d);
    CHECK(m.head(d) == m.tail(CombinatorialMap::twin(d)));
    CHECK(m.prev_around(m.next_around(d)) == d);
    CHECK(m.tail(m.next_around(d)) == m.tail(d));
  }
  CHECK(m.dart_of(1, 1) == 0);
  CHECK(m.dart_of(1, 2) == 1);
  CHECK(m.rotation(1).front() == 0);
  CHECK(m.degree(2) == 2);
  CHECK(m.adjacent(1, 3));
  CHECK(m.outer() == 0);
}

TEST_CASE("faces partition the darts") {
  const auto m = k4(true);
  const auto fs = m.faces();
  std::multiset<Dart> all;
  for (const auto& f : fs) all.insert(f.darts.begin(), f.darts.end());
  CHECK(all.size() == m.dart_count());
  CHECK(std::set<Dart>(all.begin(), all.end()).size() == m.dart_count());
  const auto of = m.face_of_darts(fs);
  for (Dart d = 0; d < static_cast<Dart>(m.dart_count()); ++d) CHECK(of[static_cast<std::size_t>(m.face_next(d))] == of[static_cast<std::size_t>(d)]);
  const auto outer = m.outer_face(fs);
  CHECK(std::find(fs[outer].darts.begin(), fs[outer].darts.end(), m.outer()) != fs[outer].darts.end());
}

TEST_CASE("inserting an edge splits a face") {
  auto m = CombinatorialMap::from_rotations({1, 2, 3, 4}, {{1, 1, 2}, {2, 2, 3}, {3, 3, 4}, {4, 4, 1}},
                                            {{1, {1, 4}}, {2, {2, 1}}, {3, {3, 2}}, {4, {4, 3}}}, std::pair{1, 1});
  const auto fs = m.faces();
  REQUIRE(fs.size() == 2);
  const auto& f = fs[0];
  const auto i1 = f.occurrences(1).front(), i3 = f.occurrences(3).front();
  m.insert_edge(m.fresh_edge_id(), f.corner(i1), f.corner(i3));
  CHECK(m.validate().ok());
  CHECK(m.faces().size() == 3);
  CHECK(m.edges().back().id == 5);
}

TEST_CASE("inserting a pendant edge at an isolated vertex") {
  auto m = CombinatorialMap::from_rotations({1, 2}, {}, {}, std::nullopt);
  // Two isolated vertices do not form a connected map, but insertion joins them.
  m.insert_edge(7, {1, -1}, {2, -1});
  CHECK(m.validate().ok());
  CHECK(m.faces().size() == 1);
}

TEST_CASE("contracting an edge") {
  auto m = k4(true);
  const VertexId gone = m.contract_edge(m.edge_index(1));
  CHECK(gone == 2);
  CHECK_FALSE(m.has_vertex(2));
  CHECK(m.vertices().size() == 3);
  CHECK(m.edges().size() == 5);
  CHECK(m.validate().ok());
  CHECK(euler(m) == 2);
  for (const Edge& e : m.edges()) CHECK_FALSE(e.touches(2));
}

TEST_CASE("contracting a triangle edge leaves a 2-cycle") {
  auto m = triangle();
  m.contract_edge(m.edge_index(1));
  CHECK(m.validate().ok());
  CHECK(m.vertices() == std::vector<VertexId>{1, 3});
  CHECK(m.faces().size() == 2);
}

TEST_CASE("removing edges and vertices") {
  auto m = k4(true);
  m.remove_edges({m.edge_index(3), m.edge_index(5), m.edge_index(6)});
  CHECK(m.edges().size() == 3);
  m.remove_vertex(4);
  CHECK(m.validate().ok());
  CHECK(m.faces().size() == 2);
  CHECK(m.outer() >= 0);
}

TEST_CASE("property: random surgery keeps Euler's formula") {
  testing::Rng rng(41);
  int merged = 0;
  for (int i = 0; i < 200; ++i) {
    testing::RandomEmbeddedSpec spec;
    auto g = testing::random_embedded(rng, spec);
    if (!g) continue;
    CombinatorialMap m = g->map;
    REQUIRE(m.validate().ok());
    CHECK(euler(m) == 2);
    for (int step = 0; step < 3 && m.edges().size() > 1; ++step) {
      const auto k = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(m.edges().size()) - 1));
      if (m.edges()[k].is_loop()) continue;
      m.contract_edge(k);
      ++merged;
      CHECK(m.validate().ok());
      CHECK(euler(m) == 2);
    }
    const auto fs = m.faces();
    const auto& f = fs[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(fs.size()) - 1))];
    if (f.vertex_set().size() < 2) continue;
    const auto a = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(f.size()) - 1));
    auto b = a;
    while (f.vertices[b] == f.vertices[a]) b = static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<int>(f.size()) - 1));
    m.insert_edge(m.fresh_edge_id(), f.corner(a), f.corner(b));
    CHECK(m.validate().ok());
    CHECK(m.faces().size() == fs.size() + 1);
  }
  CHECK(merged > 100);
}
