#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mex/instances.hpp"
#include "mex/oracle.hpp"

using namespace mex;
using namespace mex::testing;

TEST_CASE("graphic independence on wheel(5)") {
  const WheelInstance w = wheel(5);
  const GraphicMatroid g(w.graph);
  CHECK(g.rank() == 4);
  CHECK(graphic_is_independent(w.graph, set_of(g, {"s1", "s2", "r2", "r3"})));
  CHECK(graphic_is_independent(w.graph, ElementSet{}));
  CHECK_FALSE(graphic_is_independent(w.graph, set_of(g, {"s1", "s2", "r1"})));
}

TEST_CASE("wheel generator") {
  const WheelInstance w = wheel(4);
  CHECK(w.spokes() == 3);
  CHECK(w.graph.edges.size() == 6);
  CHECK(validate_instance(w).empty());
  CHECK_THROWS_AS(wheel(3), Error);
  for (int n = 4; n <= 7; ++n) {
    const GraphicMatroid g(wheel(n).graph);
    CHECK_FALSE(oracle::enumerate_compatible_pairs(g, g.ground()).empty());
  }
}

TEST_CASE("split independence on K4") {
  const ElementarySplitInstance s = k4_as_split();
  const GraphInstance k4 = k4_graph();
  const SplitMatroid sm(as_direct_sum(s));
  const GraphicMatroid gm(k4);
  CHECK_FALSE(split_is_independent(s, set_of(gm, {"a", "b", "d"})));
  CHECK(split_is_independent(s, ElementSet{}));
  CHECK(split_is_independent(s, set_of(gm, {"a", "d", "e"})));
  CHECK(validate_instance(s).empty());
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    CHECK(sm.is_independent(ElementSet(bits)) == gm.is_independent(ElementSet(bits)));
  }
  CHECK(oracle::enumerate_bases(sm) == oracle::enumerate_bases(gm));
  CHECK(oracle::enumerate_bases(gm).size() == 16);
}

TEST_CASE("split validation flags the hyperedge inequality") {
  ElementarySplitInstance s;
  s.ground = ElementSet::full(6);
  s.rank = 3;
  s.labels = {"1", "2", "3", "4", "5", "6"};
  s.hyperedges = {ElementSet{0, 1, 2}, ElementSet{0, 1, 3}};
  s.bounds = {2, 2};
  CHECK(validate_instance(s).size() == 1);
}

TEST_CASE("spike independence") {
  const SpikeMatroid free3(free_spike(3));
  CHECK_FALSE(free3.is_independent(set_of(free3, {"t", "x1", "y1"})));
  CHECK(free3.is_independent(set_of(free3, {"x1", "y1", "x2"})));
  CHECK_FALSE(free3.is_independent(set_of(free3, {"x1", "y1", "x2", "y2"})));

  const SpikeInstance bin = binary_spike(3);
  const SpikeMatroid bin3(bin);
  CHECK_FALSE(bin3.is_independent(set_of(bin3, {"x1", "y2", "y3"})));
  CHECK(bin3.is_independent(set_of(bin3, {"x1", "x2", "y3"})));
  CHECK(bin.c3_members().size() == 4);
  CHECK(validate_instance(bin).empty());
  CHECK(validate_instance(free_spike(4)).empty());
  CHECK_THROWS_AS(binary_spike(2), Error);
}

TEST_CASE("arbitrary C3 families are checked against the circuit axioms") {
  // Two transversals differing in a single leg force a circuit of size r
  // through elimination, so they cannot both be circuits.
  SpikeInstance k = free_spike(3);
  k.c3 = {ElementSet{k.x(1), k.x(2), k.x(3)}, ElementSet{k.y(1), k.x(2), k.x(3)}};
  CHECK_FALSE(validate_instance(k).empty());
  k.c3 = {ElementSet{k.x(1), k.y(2), k.y(3)}};
  CHECK(validate_instance(k).empty());
}

TEST_CASE("every spike deletion splits into two disjoint bases") {
  for (const SpikeInstance& k : {free_spike(3), binary_spike(3), free_spike(4), binary_spike(4)}) {
    auto base = std::make_shared<SpikeMatroid>(k);
    for (Element d = 0; d < k.ground_size(); ++d) {
      const DeletionView m(base, d);
      CHECK_FALSE(oracle::enumerate_compatible_pairs(m, m.ground()).empty());
    }
  }
}

TEST_CASE("random split instances validate") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    const ElementarySplitInstance s = random_elementary_split(rng, 8, 4);
    CHECK(validate_instance(s).empty());
  }
}
