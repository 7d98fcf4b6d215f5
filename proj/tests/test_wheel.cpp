#include <doctest.h>

#include "helpers.hpp"
#include "mex/oracle.hpp"
#include "mex/wheel.hpp"

using namespace mex;
using namespace mex::testing;
using wheels::Orientation;

namespace {

struct Wheel {
  explicit Wheel(int n) : w(wheel(n)), g(w.graph), unit(WeightFn::unit(g.ground_size())) {}
  WheelInstance w;
  GraphicMatroid g;
  WeightFn unit;
  std::vector<BasisPair> colorings() const { return oracle::enumerate_compatible_pairs(g, g.ground()); }
};

/// Spoke colors from a 0/1 string, rims completed for the given orientation.
BasisPair from_spokes(const WheelInstance& w, const std::string& reds, Orientation o) {
  const int m = w.spokes();
  ElementSet red;
  for (int i = 0; i < m; ++i) {
    const bool si = reds[i] == '1';
    const bool sn = reds[(i + 1) % m] == '1';
    if (si) red.insert(w.spoke(i));
    if (si == sn ? !si : (o == Orientation::Positive ? si : sn)) red.insert(w.rim(i));
  }
  return {red, ElementSet::full(2 * m) - red};
}

}  // namespace

TEST_CASE("decompose") {
  Wheel f(5);
  auto d = wheels::decompose(f.w, coloring(f.g, {"s1", "s2", "r2", "r3"}));
  REQUIRE(d.intervals.size() == 2);
  CHECK(d.intervals[0].color == Color::Red);
  CHECK(d.intervals[0].spokes == std::vector<Element>{0, 1});
  CHECK(d.intervals[1].spokes == std::vector<Element>{2, 3});
  CHECK(d.orientation == Orientation::Positive);
  CHECK(d.boundary == std::vector<Element>{f.g.find("r2"), f.g.find("r4")});

  d = wheels::decompose(f.w, coloring(f.g, {"s1", "s2", "r3", "r4"}));
  CHECK(d.intervals.size() == 2);
  CHECK(d.orientation == Orientation::Negative);

  CHECK_THROWS_AS(wheels::decompose(f.w, coloring(f.g, {"s1", "s2", "s3", "s4"})), Error);
}

TEST_CASE("phi maps are bijections and spoke exchanges keep orientation") {
  for (int n = 5; n <= 7; ++n) {
    Wheel f(n);
    for (const BasisPair& p : f.colorings()) {
      const auto d = wheels::decompose(f.w, p);
      ElementSet minus, plus;
      for (int i = 0; i < f.w.spokes(); ++i) {
        minus.insert(d.phi_minus[i]);
        plus.insert(d.phi_plus[i]);
      }
      CHECK(minus == ElementSet::full(2 * f.w.spokes()) - ElementSet::full(f.w.spokes()));
      CHECK(plus == minus);
      if (d.intervals.size() < 4) continue;
      // Feasible exchanges are exactly the spoke/phi_minus pairs.
      for (const auto& arc : oracle::PairGraph(f.g, f.g.ground()).neighbors(p.red)) {
        const Element s = f.w.is_spoke(arc.exchange.out) ? arc.exchange.out : arc.exchange.in;
        const Element r = s == arc.exchange.out ? arc.exchange.in : arc.exchange.out;
        REQUIRE(f.w.is_spoke(s));
        CHECK(d.phi_minus[s] == r);
        CHECK(wheels::orientation(f.w, {arc.red, f.g.ground() - arc.red}) == d.orientation);
      }
      int feasible = 0;
      for (int i = 0; i < f.w.spokes(); ++i) feasible += is_feasible_exchange(f.g, p, i, d.phi_minus[i]) ||
                                                                 is_feasible_exchange(f.g, p, d.phi_minus[i], i);
      CHECK(feasible == f.w.spokes());
    }
  }
}

TEST_CASE("interval weights partition w(E)") {
  Wheel f(7);
  std::mt19937_64 rng(3);
  const auto all = f.colorings();
  for (int t = 0; t < 50; ++t) {
    const BasisPair& p1 = all[rng() % all.size()];
    const BasisPair& p2 = all[rng() % all.size()];
    const WeightFn w = oracle::random_weighting(f.g.ground_size(), rng);
    const auto d = wheels::decompose(f.w, p1);
    const auto iw = wheels::interval_weights(d, p2, w);
    Rational total{0};
    for (std::size_t i = 0; i < iw.x.size(); ++i) total += iw.x[i] + iw.y[i];
    CHECK(total == w.sum(f.g.ground()));
  }
}

TEST_CASE("collapse inequalities") {
  const std::vector<Rational> ones(6, Rational(1));
  CHECK(wheels::check_ineq_A(ones, 1, 1));
  std::vector<Rational> spike(6, Rational(0));
  spike[0] = 1;
  CHECK(wheels::check_ineq_A(spike, 1, 1));
  CHECK_THROWS_AS(wheels::check_ineq_A(ones, 1, 2), Error);
  CHECK_THROWS_AS(wheels::check_ineq_B(ones, 1, 1), Error);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Rational> xs;
    for (int i = 0; i < 4 * k + 2; ++i) xs.emplace_back(static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 5));
    int holds = 0;
    for (int j = 1; j <= 2 * k + 1; ++j) holds += wheels::check_ineq_A(xs, j, k) ? 1 : 0;
    CHECK(holds >= k + 1);

    std::vector<Rational> ys;
    for (int i = 0; i < 4 * (k + 1); ++i) ys.emplace_back(static_cast<int>(rng() % 20), 1 + static_cast<int>(rng() % 5));
    holds = 0;
    for (int j = 1; j <= 4 * (k + 1); ++j) holds += wheels::check_ineq_B(ys, j, k + 1) ? 1 : 0;
    CHECK(holds >= 2 * (k + 1) + 1);
  }
}

TEST_CASE("monotone sequences for equal orientation") {
  Wheel f(5);
  const BasisPair a = coloring(f.g, {"s1", "s2", "r2", "r3"});
  const BasisPair c = coloring(f.g, {"s2", "s3", "r3", "r4"});
  CHECK(wheels::monotone_same_orientation(f.w, a, c) == seq_of(f.g, {{"s1", "r4"}, {"r2", "s3"}}));
  CHECK(wheels::monotone_same_orientation(f.w, a, a).empty());
  CHECK_THROWS_AS(wheels::monotone_same_orientation(f.w, a, coloring(f.g, {"s1", "s2", "r3", "r4"})), Error);

  Wheel h(6);
  const BasisPair p = from_spokes(h.w, "11100", Orientation::Positive);
  const BasisPair q = from_spokes(h.w, "10100", Orientation::Positive);
  const auto s = wheels::monotone_same_orientation(h.w, p, q);
  CHECK(s.size() == 1);
  CHECK(oracle::exchange_distance(h.g, p, q) == std::optional<int>(1));
}

TEST_CASE("two-interval reversal") {
  Wheel f(5);
  const BasisPair a = coloring(f.g, {"s1", "s2", "r2", "r3"});
  const BasisPair b = coloring(f.g, {"s1", "s2", "r3", "r4"});
  CHECK(wheels::solve_le4(f.w, a, b, f.unit) == seq_of(f.g, {{"r2", "r4"}}));
  CHECK(oracle::exchange_distance(f.g, a, b) == std::optional<int>(1));
  CHECK_THROWS_AS(wheels::solve_le4(f.w, a, a, f.unit), Error);
}

TEST_CASE("singleton reversal with recolor set {b,c} starts with (b,d)") {
  Wheel f(4);
  int seen = 0;
  for (const BasisPair& p1 : f.colorings()) {
    const auto d1 = wheels::decompose(f.w, p1);
    if (d1.orientation != Orientation::Positive) continue;
    for (const auto& iv : d1.intervals) {
      if (iv.spokes.size() != 1 || iv.color != Color::Red) continue;
      const int m = f.w.spokes();
      const Element c = iv.spokes[0];
      const Element a = f.w.spoke((c + m - 1) % m), b = f.w.rim((c + m - 1) % m), dd = f.w.rim(c);
      for (const BasisPair& p2 : f.colorings()) {
        if (wheels::orientation(f.w, p2) != Orientation::Negative) continue;
        if (((p1.red ^ p2.red) & ElementSet{a, b, c, dd}) != ElementSet{b, c}) continue;
        const auto s = wheels::solve_le4(f.w, p1, p2, f.unit);
        REQUIRE(s.size() >= 3);
        CHECK(ElementSet{s.steps[0].out, s.steps[0].in} == ElementSet{b, dd});
        CHECK(ElementSet{s.steps[2].out, s.steps[2].in} == ElementSet{c, dd});
        ++seen;
      }
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("six alternating intervals against the reversed orientation") {
  Wheel f(8);
  // Seven spokes alternate into six intervals; s7 and s1 share one.
  const BasisPair p1 = from_spokes(f.w, "1010101", Orientation::Positive);
  const BasisPair p2 = from_spokes(f.w, "1010101", Orientation::Negative);
  REQUIRE(wheels::decompose(f.w, p1).intervals.size() == 6);
  const auto s = wheels::solve_ge6(f.w, p1, p2, f.unit, f.unit);
  const auto rep = verify_sequence(f.g, p1, p2, s, f.unit);
  CHECK(rep.valid);
  CHECK(rep.weight <= Rational(14));
  CHECK(rep.max_usage <= 2);
  CHECK_THROWS_AS(wheels::solve_ge6(f.w, from_spokes(f.w, "1100100", Orientation::Positive), p2, f.unit, f.unit),
                  Error);
}

TEST_CASE("admissible index exists for random weight pairs") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const int n = 7 + static_cast<int>(rng() % 6);
    const WheelInstance w = wheel(n);
    const int m = w.spokes();
    std::string reds;
    do {
      reds.clear();
      for (int i = 0; i < m; ++i) reds.push_back(rng() % 2 ? '1' : '0');
    } while (reds.find('1') == std::string::npos || reds.find('0') == std::string::npos ||
             wheels::decompose(w, from_spokes(w, reds, Orientation::Positive)).intervals.size() < 6);
    std::string reds2;
    do {
      reds2.clear();
      for (int i = 0; i < m; ++i) reds2.push_back(rng() % 2 ? '1' : '0');
    } while (reds2.find('1') == std::string::npos || reds2.find('0') == std::string::npos);
    const BasisPair p1 = from_spokes(w, reds, Orientation::Positive);
    const BasisPair p2 = from_spokes(w, reds2, Orientation::Negative);
    const auto d = wheels::decompose(w, p1);
    const auto x1 = wheels::interval_weights(d, p2, oracle::random_weighting(2 * m, rng)).x;
    const auto x2 = wheels::interval_weights(d, p2, oracle::random_weighting(2 * m, rng)).x;
    const int q2 = static_cast<int>(x1.size());
    bool found = false;
    for (int j = 1; j <= q2 && !found; ++j) {
      found = q2 % 4 == 2 ? wheels::check_ineq_A(x1, j, (q2 - 2) / 4) && wheels::check_ineq_A(x2, j, (q2 - 2) / 4)
                          : wheels::check_ineq_B(x1, j, q2 / 4) && wheels::check_ineq_B(x2, j, q2 / 4);
    }
    CHECK(found);
  }
}

TEST_CASE("solve_wheel on every pair of wheel(4..7)") {
  for (int n = 4; n <= 7; ++n) {
    Wheel f(n);
    const auto all = f.colorings();
    const oracle::PairGraph graph(f.g, f.g.ground());
    int mismatched = 0;
    for (const BasisPair& p1 : all) {
      const auto dist = graph.bfs(p1.red);
      for (const BasisPair& p2 : all) {
        const auto s = wheels::solve_wheel(f.w, p1, p2, f.unit);
        const auto rep = verify_sequence(f.g, p1, p2, s, f.unit);
        REQUIRE(rep.valid);
        CHECK(static_cast<int>(rep.length) <= f.w.spokes());
        CHECK(rep.max_usage <= 2);
        CHECK(static_cast<int>(rep.length) >= dist.at(p2.red.bits()));
        if (wheels::orientation(f.w, p1) == wheels::orientation(f.w, p2)) {
          mismatched += static_cast<int>(rep.length) != dist.at(p2.red.bits());
          CHECK(rep.monotone);
        }
      }
    }
    CHECK(mismatched == 0);
  }
}

TEST_CASE("solve_wheel with random rational weights") {
  std::mt19937_64 rng(17);
  for (int n = 5; n <= 9; ++n) {
    Wheel f(n);
    const auto all = f.colorings();
    for (int t = 0; t < 300; ++t) {
      const BasisPair& p1 = all[rng() % all.size()];
      const BasisPair& p2 = all[rng() % all.size()];
      const WeightFn w = oracle::random_weighting(f.g.ground_size(), rng);
      const auto rep = verify_sequence(f.g, p1, p2, wheels::solve_wheel(f.w, p1, p2, w), w);
      REQUIRE(rep.valid);
      CHECK(rep.weight <= w.sum(f.g.ground()));
      CHECK(rep.max_usage <= 2);
    }
  }
}

TEST_CASE("opposite orientations pass through a two-interval coloring") {
  Wheel f(6);
  const auto all = f.colorings();
  for (std::size_t i = 0; i < all.size(); i += 7) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      if (wheels::orientation(f.w, all[i]) == wheels::orientation(f.w, all[j])) continue;
      const auto s = oracle::shortest_sequence(f.g, all[i], all[j]);
      REQUIRE(s);
      BasisPair cur = all[i];
      bool two = wheels::decompose(f.w, cur).intervals.size() == 2;
      for (auto x : s->steps) {
        cur = apply_exchange(f.g, cur, x);
        two = two || wheels::decompose(f.w, cur).intervals.size() == 2;
      }
      CHECK(two);
    }
  }
}
