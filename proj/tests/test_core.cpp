#include <doctest.h>

#include "helpers.hpp"
#include "mex/instances.hpp"

using namespace mex;
using namespace mex::testing;

namespace {

struct Wheel5 {
  WheelInstance w = wheel(5);
  GraphicMatroid g{w.graph};
  BasisPair a = coloring(g, {"s1", "s2", "r2", "r3"});
  BasisPair b = coloring(g, {"s1", "s2", "r3", "r4"});
  BasisPair c = coloring(g, {"s2", "s3", "r3", "r4"});
};

}  // namespace

TEST_CASE("rationals print with an explicit denominator") {
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(parse_rational("7/14") == Rational(1, 2));
  CHECK(parse_rational("5") == Rational(5));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("feasible exchanges on wheel(5)") {
  Wheel5 f;
  CHECK(f.a.blue == set_of(f.g, {"s3", "s4", "r4", "r1"}));
  CHECK(is_feasible_exchange(f.g, f.a, f.g.find("r2"), f.g.find("r4")));
  CHECK_FALSE(is_feasible_exchange(f.g, f.a, f.g.find("s1"), f.g.find("r1")));
  CHECK_FALSE(is_feasible_exchange(f.g, f.a, f.g.find("s3"), f.g.find("s1")));
}

TEST_CASE("apply_exchange") {
  Wheel5 f;
  const Exchange x{f.g.find("r2"), f.g.find("r4")};
  const BasisPair next = apply_exchange(f.g, f.a, x);
  CHECK(next == pair_of(f.g, {"s1", "s2", "r4", "r3"}, {"s3", "s4", "r2", "r1"}));
  CHECK(apply_exchange(f.g, next, {x.in, x.out}) == f.a);
  CHECK_THROWS_AS(apply_exchange(f.g, f.a, {f.g.find("s1"), f.g.find("r1")}), Error);

  SpikeInstance k = free_spike(3);
  auto base = std::make_shared<SpikeMatroid>(k);
  DeletionView m(base, k.tip());
  const BasisPair p = pair_of(m, {"x1", "y1", "x2"}, {"y2", "x3", "y3"});
  CHECK(apply_exchange(m, p, {m.find("x1"), m.find("y2")}) == pair_of(m, {"y1", "x2", "y2"}, {"x1", "x3", "y3"}));
}

TEST_CASE("verify_sequence") {
  Wheel5 f;
  const WeightFn unit = WeightFn::unit(8);
  SequenceReport rep = verify_sequence(f.g, f.a, f.b, seq_of(f.g, {{"r2", "r4"}}), unit);
  CHECK(rep.valid);
  CHECK(rep.length == 1);
  CHECK(rep.weight == Rational(2));
  CHECK(rep.max_usage == 1);
  CHECK(rep.monotone);

  rep = verify_sequence(f.g, f.a, f.a, {}, unit);
  CHECK(rep.valid);
  CHECK(rep.weight == Rational(0));

  rep = verify_sequence(f.g, f.a, f.b, seq_of(f.g, {{"s1", "r4"}}), unit);
  CHECK_FALSE(rep.valid);
  CHECK(rep.failure_step == std::optional<std::size_t>(1));

  const BasisPair other_union{f.a.red, ElementSet{}};
  CHECK_THROWS_AS(verify_sequence(f.g, f.a, other_union, {}, unit), Error);
}

TEST_CASE("lower bounds") {
  Wheel5 f;
  const WeightFn unit = WeightFn::unit(8);
  CHECK(lower_bounds(f.a, f.a, unit) == std::make_pair(0, Rational(0)));
  CHECK(lower_bounds(f.a, f.c, unit) == std::make_pair(2, Rational(4)));
  CHECK(lower_bounds(f.a, f.b, unit) == std::make_pair(1, Rational(2)));
}

TEST_CASE("reversal and color swap of sequences") {
  Wheel5 f;
  CHECK(reverse_sequence(seq_of(f.g, {{"r2", "r4"}})) == seq_of(f.g, {{"r4", "r2"}}));
  CHECK(reverse_sequence({}).empty());

  const ExchangeSequence ac = seq_of(f.g, {{"s1", "r4"}, {"r2", "s3"}});
  const WeightFn unit = WeightFn::unit(8);
  CHECK(verify_sequence(f.g, f.a, f.c, ac, unit).valid);
  const ExchangeSequence ca = reverse_sequence(ac);
  CHECK(ca == seq_of(f.g, {{"s3", "r2"}, {"r4", "s1"}}));
  CHECK(verify_sequence(f.g, f.c, f.a, ca, unit).valid);
  CHECK(verify_sequence(f.g, f.a.swapped(), f.c.swapped(), swap_colors_sequence(ac), unit).valid);
}

TEST_CASE("weights reject negative entries") {
  CHECK_THROWS_AS(WeightFn({Rational(1), Rational(-1)}), Error);
  const WeightFn w({Rational(1, 3), Rational(2, 3), Rational(5)});
  CHECK(w.sum(ElementSet{0, 1}) == Rational(1));
  CHECK(WeightFn::indicator(3, 2).sum(ElementSet::full(3)) == Rational(1));
}
