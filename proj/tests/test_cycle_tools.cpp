#include <doctest.h>

#include "cplanar/cycle_tools.hpp"
#include "generators.hpp"
#include "reference.hpp"

using namespace cplanar;

namespace {

CyclicClusteredCycle cyc(int k, std::vector<int> phi) { return {k, std::move(phi)}; }

}  // namespace

TEST_CASE("edge signs") {
  CHECK(edge_sign(cyc(3, {1, 2, 3}), 0) == 1);
  CHECK(edge_sign(cyc(3, {1, 1, 2, 3}), 0) == 0);
  CHECK(edge_sign(cyc(3, {1, 3, 2}), 0) == -1);
  CHECK(edge_sign(cyc(3, {1, 2, 3}), 2) == 1);  // closing edge 3 -> 1
}

TEST_CASE("winding numbers") {
  CHECK(winding_number(cyc(3, {3, 1, 2, 3, 1, 2, 3, 1, 2})) == 3);
  CHECK(winding_number(cyc(3, {1, 2, 3, 2})) == 0);
  CHECK(winding_number(cyc(3, {1, 2, 3})) == 1);
  CHECK(winding_number(cyc(3, {3, 2, 1})) == -1);
  CHECK_THROWS_AS(winding_number(cyc(4, {1, 3, 4})), std::invalid_argument);
  CHECK_THROWS_AS(winding_number(cyc(2, {1, 2, 1})), std::invalid_argument);
}

TEST_CASE("validation of cyclic-clustered cycles") {
  CHECK(validate(cyc(3, {1, 2, 3})).ok());
  CHECK_FALSE(validate(cyc(3, {1, 2, 3, 2})).ok());  // pair {3,1} unused
  CHECK_FALSE(validate(cyc(4, {1, 2, 4, 1})).ok());  // 2 -> 4 skips a cluster
  CHECK_FALSE(validate(cyc(3, {1, 2, 7})).ok());
}

TEST_CASE("monotonicity") {
  const auto two_turns = cyc(3, {1, 2, 3, 1, 2, 3});
  CHECK(is_monotone(two_turns));
  CHECK(winding_number(two_turns) == 2);
  CHECK_FALSE(is_monotone(cyc(3, {1, 1, 2, 3})));
  CHECK_FALSE(is_monotone(cyc(3, {1, 2, 1, 2, 3})));
}

TEST_CASE("monotone reduction") {
  SUBCASE("an intra-cluster edge") {
    const auto r = monotone_reduce(cyc(3, {1, 1, 2, 3}));
    CHECK(r.cycle.phi == std::vector<int>{1, 2, 3});
    CHECK(r.trace.size() == 1);
    CHECK(r.winding == 1);
  }
  SUBCASE("a path returning to its cluster") {
    const auto r = monotone_reduce(cyc(3, {1, 2, 1, 2, 3}));
    CHECK(r.cycle.phi == std::vector<int>{1, 2, 3});
    CHECK(r.labels == std::vector<int>{1, 4, 5});
    CHECK(r.trace.size() == 1);
  }
  SUBCASE("already monotone") {
    const auto c = cyc(3, {3, 1, 2, 3, 1, 2, 3, 1, 2});
    const auto r = monotone_reduce(c);
    CHECK(r.cycle == c);
    CHECK(r.trace.empty());
  }
  SUBCASE("winding zero collapses") {
    const auto r = monotone_reduce(cyc(3, {1, 2, 3, 2}));
    CHECK(r.trivial);
    CHECK(r.winding == 0);
  }
}

TEST_CASE("c-planarity criterion for cycles") {
  CHECK_FALSE(cortese_test(cyc(3, {3, 1, 2, 3, 1, 2, 3, 1, 2})));
  CHECK(cortese_test(cyc(3, {1, 2, 3})));
  CHECK(cortese_test(cyc(3, {1, 2, 3, 2})));
}

TEST_CASE("counterexample generator") {
  CHECK(generate_counterexample(3, 3).phi == std::vector<int>{3, 1, 2, 3, 1, 2, 3, 1, 2});
  const auto small = generate_counterexample(3, 1);
  CHECK(small.n() == 3);
  CHECK(winding_number(small) == 1);
  CHECK(cortese_test(small));
  const auto wide = generate_counterexample(4, 3);
  CHECK(wide.n() == 12);
  CHECK(winding_number(wide) == 3);
  CHECK_FALSE(cortese_test(wide));
  CHECK_THROWS_AS(generate_counterexample(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(generate_counterexample(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(generate_counterexample(3, -1), std::invalid_argument);
}

TEST_CASE("property: generator outputs") {
  for (int k = 3; k <= 7; ++k)
    for (int r = 1; r <= 9; r += 2) {
      const auto c = generate_counterexample(k, r);
      CAPTURE(k);
      CAPTURE(r);
      CHECK(validate(c).ok());
      CHECK(c.n() == static_cast<std::size_t>(k * r));
      CHECK(is_monotone(c));
      CHECK(std::abs(winding_number(c)) == r);
      CHECK(cortese_test(c) == (r == 1));
      if (!cortese_test(c)) {
        CHECK(winding_number(c) % 2 != 0);
        CHECK(std::abs(winding_number(c)) != 1);
      }
    }
}

TEST_CASE("property: reduction preserves the winding number") {
  testing::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const int k = 3 + i % 3;
    const auto c = testing::random_cycle(rng, k, testing::uniform(rng, k, 24));
    const int w = testing::reference_winding(c.phi, k);
    CHECK(winding_number(c) == w);
    const auto r = monotone_reduce(c);
    CHECK(r.winding == w);
    if (r.trivial) {
      CHECK(w == 0);
    } else {
      CHECK(is_monotone(r.cycle));
      CHECK(testing::reference_winding(r.cycle.phi, k) == w);
      CHECK(r.cycle.n() == static_cast<std::size_t>(std::abs(w) * k));
      CHECK(r.labels.size() == r.cycle.n());
    }
  }
}

TEST_CASE("property: graph round trip") {
  testing::Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    const int k = 3 + i % 4;
    const auto c = testing::random_cycle(rng, k, testing::uniform(rng, k, 20));
    const auto g = to_clustered_graph(c);
    CHECK(classify(g).cyclic_clustered);
    CHECK(cycle_from_graph(g) == c);
  }
}

TEST_CASE("sinusoid drawing is even") {
  for (auto [k, r] : std::vector<std::pair<int, int>>{{3, 1}, {3, 3}}) {
    const auto s = sinusoid_parity_vector(k, r, 10000);
    CHECK(s.parity.all_zero());
    CHECK(s.parity.dimension() == static_cast<std::size_t>(k * r * (k * r - 3) / 2));
  }
  CHECK(sinusoid_parity_vector(3, 3, 10000).crossings > 0);
  CHECK_THROWS_AS(sinusoid_parity_vector(3, 3, 1), std::invalid_argument);
}
