#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mex/io.hpp"

using namespace mex;
using namespace mex::testing;
using io::Json;

namespace {

void round_trip(const io::InstanceData& data) {
  const io::Instance a = io::make_instance(data);
  const Json j = io::instance_to_json(a);
  const io::Instance b = io::instance_from_json(j);
  CHECK(b.type() == a.type());
  CHECK(io::instance_to_json(b) == j);
  CHECK(b.matroid->labels() == a.matroid->labels());
  CHECK(b.matroid->rank() == a.matroid->rank());
}

}  // namespace

TEST_CASE("instance round trips") {
  std::mt19937_64 rng(2);
  round_trip(k4_graph());
  round_trip(wheel(6));
  round_trip(uniform(2, 5));
  round_trip(random_partition(rng, 3, 2));
  round_trip(k4_as_split());
  round_trip(with_uniform(as_direct_sum(random_elementary_split(rng, 6, 3)), 1, 2));
  round_trip(binary_spike(4));
  round_trip(free_spike(3));
}

TEST_CASE("bundles and pairs") {
  const io::Instance k4 = io::make_instance(k4_graph());
  const BasisPair p1 = pair_of(*k4.matroid, {"a", "b", "c"}, {"d", "e", "f"});
  const BasisPair p2 = pair_of(*k4.matroid, {"b", "d", "f"}, {"a", "c", "e"});
  const Json bundle{{"instance", io::instance_to_json(k4)}, {"pair", io::pairs_to_json(*k4.matroid, p1, p2)}};
  const io::Instance back = io::instance_from_json(bundle);
  const auto [q1, q2] = io::pairs_from_json(*back.matroid, bundle);
  CHECK(q1 == p1);
  CHECK(q2 == p2);

  Json swapped = io::pairs_to_json(*k4.matroid, p1, p2);
  swapped["R2"] = Json::array({"a", "b", "d"});
  swapped["B2"] = Json::array({"c", "e", "f"});
  // a, b and d form a triangle.
  CHECK_THROWS_AS(io::pairs_from_json(*k4.matroid, swapped), Error);
}

TEST_CASE("weights and sequences") {
  const io::Instance w5 = io::make_instance(wheel(5));
  const Matroid& m = *w5.matroid;
  std::vector<Rational> v(8, Rational(1, 3));
  v[2] = Rational(7);
  const WeightFn w(v);
  const Json j = io::weights_to_json(m, w);
  CHECK(j["s3"] == "7/1");
  CHECK(io::weights_from_json(m, j).values() == w.values());

  Json missing = j;
  missing.erase("r4");
  CHECK_THROWS_AS(io::weights_from_json(m, missing), Error);
  Json negative = j;
  negative["r4"] = "-1/2";
  CHECK_THROWS_AS(io::weights_from_json(m, negative), Error);

  const ExchangeSequence s = seq_of(m, {{"r2", "r4"}, {"s1", "r1"}});
  CHECK(io::sequence_from_json(m, Json{{"sequence", io::sequence_to_json(m, s)}}) == s);
  CHECK_THROWS_AS(io::sequence_from_json(m, Json{{"sequence", {{"r2"}}}}), Error);
}

TEST_CASE("malformed instances are rejected") {
  CHECK_THROWS_AS(io::instance_from_json(Json{{"type", "torus"}}), Error);
  CHECK_THROWS_AS(io::instance_from_json(Json{{"type", "wheel"}}), Error);
  CHECK_THROWS_AS(io::instance_from_json(Json{{"type", "wheel"}, {"n", "five"}}), Error);
  CHECK_THROWS_AS(io::instance_from_json(Json{{"type", "spike"}, {"r", 2}}), Error);
  Json bad_c3{{"type", "spike"}, {"r", 3}, {"c3", {{"x1", "x2"}}}};
  CHECK_THROWS_AS(io::instance_from_json(bad_c3), Error);
  Json overlap{{"type", "partition"}, {"labels", {"1", "2"}}, {"parts", {{"1", "2"}, {"2"}}}, {"capacities", {1, 1}}};
  CHECK_THROWS_AS(io::instance_from_json(overlap), Error);
}
