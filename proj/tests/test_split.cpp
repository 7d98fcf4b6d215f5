#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mex/oracle.hpp"
#include "mex/split.hpp"

using namespace mex;
using namespace mex::testing;

namespace {

struct SweepStats {
  int pairs = 0;
  int reuse = 0;
};

/// Every ordered pair of colorings of every union, unit weights plus `extra`
/// random weightings. Length must match the exchange distance.
SweepStats sweep(const SplitDirectSum& d, std::mt19937_64& rng, int extra) {
  const SplitMatroid m(d);
  SweepStats stats;
  std::vector<WeightFn> ws{WeightFn::unit(m.ground_size())};
  for (int i = 0; i < extra; ++i) ws.push_back(oracle::random_weighting(m.ground_size(), rng));
  for (const auto& cls : oracle::enumerate_pair_classes(m)) {
    for (const BasisPair& p1 : cls) {
      for (const BasisPair& p2 : cls) {
        const int r = m.rank();
        const int common = (p1.red & p2.red).size();
        const bool mono = oracle::exists_monotone_sequence(m, p1, p2);
        const auto dist = oracle::exchange_distance(m, p1, p2);
        for (const WeightFn& w : ws) {
          const auto s = split::solve_split(d, p1, p2, w);
          const auto rep = verify_sequence(m, p1, p2, s, w);
          REQUIRE(rep.valid);
          CHECK(static_cast<int>(rep.length) <= std::min(r, r - common + 1));
          CHECK(rep.weight <= w.sum(p1.united()));
          CHECK(std::optional<int>(static_cast<int>(rep.length)) == dist);
          CHECK(rep.monotone == mono);
          if (!mono) {
            int twice = 0;
            Element z = 0;
            for (Element e = 0; e < m.ground_size(); ++e) {
              if (rep.usage[e] == 2) {
                ++twice;
                z = e;
              }
            }
            CHECK(twice == 1);
            CHECK(rep.max_usage == 2);
            CHECK(2 * w(z) <= w.sum((p1.red & p2.red) | (p1.blue & p2.blue)));
          }
        }
        ++stats.pairs;
        if (static_cast<int>(split::solve_split(d, p1, p2, ws[0]).size()) == r - common + 1) ++stats.reuse;
      }
    }
  }
  return stats;
}

}  // namespace

TEST_CASE("tight sets") {
  const ElementarySplitInstance k4 = k4_as_split();
  const SplitMatroid m(as_direct_sum(k4));
  // A path meets two triangles in two edges each.
  const auto t = split::tight_sets(k4, set_of(m, {"a", "b", "c"}));
  CHECK(t.hyperedges.size() == 2);
  CHECK(split::tight_sets(k4, ElementSet{}).hyperedges.empty());
}

TEST_CASE("uniform monotone") {
  const UniformMatroid u(uniform(2, 4));
  const BasisPair p1 = pair_of(u, {"1", "2"}, {"3", "4"});
  const BasisPair p2 = pair_of(u, {"3", "4"}, {"1", "2"});
  CHECK(split::solve_uniform_monotone(2, u.ground(), p1, p2) == seq_of(u, {{"1", "3"}, {"2", "4"}}));
  CHECK(split::solve_uniform_monotone(2, u.ground(), p1, p1).empty());
  const UniformMatroid u12(uniform(1, 2));
  CHECK(split::solve_uniform_monotone(1, u12.ground(), pair_of(u12, {"1"}, {"2"}), pair_of(u12, {"2"}, {"1"})) ==
        seq_of(u12, {{"1", "2"}}));
  CHECK_THROWS_AS(split::solve_uniform_monotone(2, u.ground(), p1, pair_of(u, {"1", "3"}, {"2"})), Error);
}

TEST_CASE("longest monotone prefix") {
  const SplitMatroid m(as_direct_sum(k4_as_split()));
  const BasisPair p1 = pair_of(m, {"a", "b", "c"}, {"d", "e", "f"});
  const BasisPair p2 = pair_of(m, {"b", "d", "f"}, {"a", "c", "e"});
  const auto same = split::longest_monotone_prefix(m, p1, p1);
  CHECK(same.sequence.empty());
  CHECK(same.end == p1);

  CHECK_FALSE(oracle::exists_monotone_sequence(m, p1, p2));
  const auto pre = split::longest_monotone_prefix(m, p1, p2);
  CHECK(static_cast<int>(pre.sequence.size()) < 3 - 1);
  CHECK(verify_sequence(m, p1, pre.end, pre.sequence, WeightFn::unit(6)).monotone);

  const BasisPair q2 = pair_of(m, {"d", "e", "f"}, {"a", "b", "c"});
  REQUIRE(oracle::exists_monotone_sequence(m, p1, q2));
  const auto full = split::longest_monotone_prefix(m, p1, q2);
  CHECK(full.end == q2);
  CHECK(oracle::exchange_distance(m, p1, q2) == std::optional<int>(static_cast<int>(full.sequence.size())));
}

TEST_CASE("reuse completion on K4") {
  const ElementarySplitInstance k4 = k4_as_split();
  const SplitMatroid m(as_direct_sum(k4));
  const BasisPair p1 = pair_of(m, {"a", "b", "c"}, {"d", "e", "f"});
  const BasisPair p2 = pair_of(m, {"b", "d", "f"}, {"a", "c", "e"});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightFn w = trial == 0 ? WeightFn::unit(6) : oracle::random_weighting(6, rng);
    const auto pre = split::longest_monotone_prefix(m, p1, p2);
    const auto tail = split::completion_with_reuse(k4, pre.end, p2, w, (p1.red & p2.red) | (p1.blue & p2.blue));
    ExchangeSequence s = pre.sequence;
    s.append(tail);
    const auto rep = verify_sequence(m, p1, p2, s, w);
    REQUIRE(rep.valid);
    CHECK(rep.length == 3);
    CHECK(rep.max_usage == 2);
    Element z = 0;
    for (Element e = 0; e < 6; ++e) z = rep.usage[e] == 2 ? e : z;
    const ElementSet pool = (p1.red & p2.red) | (p1.blue & p2.blue);
    CHECK(pool.contains(z));
    CHECK(rep.weight == 2 * w(z) + w.sum(p1.red ^ p2.red));
    CHECK(rep.weight == w.sum(p1.united()) + 2 * w(z) - w.sum(pool));
    CHECK(rep.weight <= w.sum(p1.united()));
  }
  CHECK_THROWS_AS(split::completion_with_reuse(k4, p1, p2, WeightFn::unit(6), ElementSet{}), Error);
}

TEST_CASE("direct sum of two uniform matroids") {
  SplitDirectSum d;
  d = with_uniform(with_uniform(d, 1, 2), 2, 4);
  REQUIRE(validate_instance(d).empty());
  const SplitMatroid m(d);
  const BasisPair p1 = pair_of(m, {"u1", "u3", "u4"}, {"u2", "u5", "u6"});
  const BasisPair p2 = p1.swapped();
  const auto rep = verify_sequence(m, p1, p2, split::solve_split(d, p1, p2, WeightFn::unit(6)), WeightFn::unit(6));
  CHECK(rep.valid);
  CHECK(rep.monotone);
  CHECK(rep.length == 3);
  CHECK(split::solve_split(d, p1, p1, WeightFn::unit(6)).empty());
}

TEST_CASE("K4 sweep attains the +1 bound") {
  std::mt19937_64 rng(11);
  const SweepStats s = sweep(as_direct_sum(k4_as_split()), rng, 3);
  CHECK(s.pairs > 0);
  CHECK(s.reuse > 0);
}

TEST_CASE("random elementary split instances, alone and with a uniform summand") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 12; ++i) {
    const ElementarySplitInstance e = random_elementary_split(rng, 8, 4);
    REQUIRE(validate_instance(e).empty());
    sweep(as_direct_sum(e), rng, 1);
  }
  for (int i = 0; i < 6; ++i) {
    const ElementarySplitInstance e = random_elementary_split(rng, 6, 3);
    const SplitDirectSum d = with_uniform(as_direct_sum(e), 1, 2);
    REQUIRE(validate_instance(d).empty());
    sweep(d, rng, 1);
  }
}
