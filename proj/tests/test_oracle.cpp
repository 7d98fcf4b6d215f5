#include <doctest.h>

#include "helpers.hpp"
#include "mex/oracle.hpp"
#include "mex/wheel.hpp"

using namespace mex;
using namespace mex::testing;

TEST_CASE("basis enumeration") {
  const GraphicMatroid k4(k4_graph());
  CHECK(oracle::enumerate_bases(k4).size() == 16);
  const UniformMatroid u(uniform(2, 4));
  CHECK(oracle::enumerate_bases(u).size() == 6);
  const GraphicMatroid w4(wheel(4).graph);
  CHECK_FALSE(oracle::enumerate_compatible_pairs(w4, w4.ground()).empty());
  CHECK_THROWS_AS(oracle::enumerate_bases(GraphicMatroid(wheel(10).graph)), Error);
}

TEST_CASE("exchange distances") {
  const GraphicMatroid g(wheel(5).graph);
  const BasisPair a = coloring(g, {"s1", "s2", "r2", "r3"});
  const BasisPair b = coloring(g, {"s1", "s2", "r3", "r4"});
  CHECK(oracle::exchange_distance(g, a, a) == std::optional<int>(0));
  CHECK(oracle::exchange_distance(g, a, b) == std::optional<int>(1));
  const WeightFn unit = WeightFn::unit(8);
  CHECK(oracle::weighted_exchange_distance(g, a, b, unit) == std::optional<Rational>(2));

  const GraphicMatroid k4(k4_graph());
  const BasisPair p1 = pair_of(k4, {"a", "b", "c"}, {"d", "e", "f"});
  const BasisPair p2 = pair_of(k4, {"b", "d", "f"}, {"a", "c", "e"});
  CHECK(oracle::exchange_distance(k4, p1, p2) == std::optional<int>(3));
  CHECK(lower_bounds(p1, p2, WeightFn::unit(6)).first + 1 == 3);
}

TEST_CASE("dijkstra with unit weights doubles bfs") {
  const GraphicMatroid g(wheel(6).graph);
  const oracle::PairGraph graph(g, g.ground());
  const auto all = oracle::enumerate_compatible_pairs(g, g.ground());
  const auto bfs = graph.bfs(all.front().red);
  const auto dij = graph.dijkstra(all.front().red, WeightFn::unit(10));
  REQUIRE(bfs.size() == dij.size());
  for (auto [k, d] : bfs) CHECK(dij.at(k) == Rational(2 * d));
}

TEST_CASE("shortest sequences replay") {
  const GraphicMatroid g(wheel(6).graph);
  const auto all = oracle::enumerate_compatible_pairs(g, g.ground());
  for (std::size_t i = 0; i < all.size(); i += 11) {
    const auto s = oracle::shortest_sequence(g, all[0], all[i]);
    REQUIRE(s);
    const auto rep = verify_sequence(g, all[0], all[i], *s, WeightFn::unit(10));
    CHECK(rep.valid);
    CHECK(oracle::exchange_distance(g, all[0], all[i]) == std::optional<int>(static_cast<int>(s->size())));
  }
}

TEST_CASE("monotone existence") {
  const WheelInstance w = wheel(6);
  const GraphicMatroid g(w.graph);
  const auto all = oracle::enumerate_compatible_pairs(g, g.ground());
  const WeightFn unit = WeightFn::unit(10);
  for (std::size_t i = 0; i < all.size(); i += 3) {
    for (std::size_t j = 0; j < all.size(); j += 4) {
      const bool mono = oracle::exists_monotone_sequence(g, all[i], all[j]);
      if (wheels::orientation(w, all[i]) == wheels::orientation(w, all[j])) CHECK(mono);
      const int d = *oracle::exchange_distance(g, all[i], all[j]);
      const auto [lb, wlb] = lower_bounds(all[i], all[j], unit);
      CHECK(d >= lb);
      if (mono) CHECK(d == lb);
    }
  }
  CHECK(oracle::exists_monotone_sequence(g, all[0], all[0]));
}

TEST_CASE("binary spike distinguished pairs admit no monotone sequence") {
  for (int r = 3; r <= 5; ++r) {
    const SpikeInstance k = binary_spike(r);
    const DeletionView m(std::make_shared<SpikeMatroid>(k), k.x(1));
    std::vector<BasisPair> special;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (r - 1)); ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      BasisPair p{ElementSet{k.y(1)}, ElementSet{k.tip()}};
      for (int i = 2; i <= r; ++i) {
        const bool x_red = (mask >> (i - 2)) & 1U;
        p.red.insert(x_red ? k.x(i) : k.y(i));
        p.blue.insert(x_red ? k.y(i) : k.x(i));
      }
      REQUIRE(is_valid_pair(m, p));
      special.push_back(p);
    }
    CHECK(special.size() == (std::size_t{1} << (r - 2)));
    for (const auto& p : special) {
      for (const auto& q : special) {
        if (!(p == q)) CHECK_FALSE(oracle::exists_monotone_sequence(m, p, q));
      }
    }
  }
}

TEST_CASE("conjecture sweeps report no violations") {
  for (int n = 4; n <= 6; ++n) {
    const GraphicMatroid g(wheel(n).graph);
    const auto rep = oracle::conjecture_sweep(g, oracle::random_weightings(g.ground_size(), 20, n));
    CHECK(rep.violations.empty());
    CHECK(rep.max_distance <= rep.rank);
  }
  const SplitMatroid k4(as_direct_sum(k4_as_split()));
  const auto rep = oracle::conjecture_sweep(k4, {WeightFn::unit(6)});
  CHECK(rep.violations.empty());
  CHECK(rep.max_distance == 3);
}

TEST_CASE("gap search") {
  const auto w9 = oracle::gap_search(wheel(9));
  CHECK(w9.lower_bound == 2);
  CHECK(w9.distance >= 2);
  CHECK(wheels::orientation(wheel(9), w9.p1) != wheels::orientation(wheel(9), w9.p2));
  CHECK_THROWS_AS(oracle::gap_search(wheel(14)), Error);
}

TEST_CASE("two-weight counterexample on K4") {
  const GraphicMatroid k4(k4_graph());
  const auto wit = oracle::two_weight_counterexample(k4);
  CHECK(oracle::every_sequence_reuses(k4, wit.p1, wit.p2, wit.first, wit.second));

  // The standard K4 pair, reusing b or e.
  const BasisPair p1 = pair_of(k4, {"a", "b", "c"}, {"d", "e", "f"});
  const BasisPair p2 = pair_of(k4, {"b", "d", "f"}, {"a", "c", "e"});
  CHECK(oracle::every_sequence_reuses(k4, p1, p2, k4.find("b"), k4.find("e")));

  const UniformMatroid u(uniform(2, 4));
  CHECK_THROWS_AS(oracle::two_weight_counterexample(u), Error);
}
