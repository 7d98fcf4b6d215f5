#include "mex/wheel.hpp"

#include <algorithm>

#include "walker.hpp"

namespace mex::wheels {

namespace {

using detail::Walker;

int mod(int a, int m) { return ((a % m) + m) % m; }

Element phi_minus_of(const WheelInstance& w, Orientation o, int i) {
  const int m = w.spokes();
  return o == Orientation::Positive ? w.rim(mod(i - 1, m)) : w.rim(i);
}

Element phi_plus_of(const WheelInstance& w, Orientation o, int i) {
  const int m = w.spokes();
  return o == Orientation::Positive ? w.rim(i) : w.rim(mod(i - 1, m));
}

int count_spokes(const WheelInstance& w, const BasisPair& p, Color c) {
  int k = 0;
  for (int i = 0; i < w.spokes(); ++i) k += p.color(w.spoke(i)) == c ? 1 : 0;
  return k;
}

/// Interval i of `d` becomes interval 0.
IntervalDecomposition rotated(IntervalDecomposition d, std::size_t first) {
  std::rotate(d.intervals.begin(), d.intervals.begin() + first, d.intervals.end());
  std::rotate(d.boundary.begin(), d.boundary.begin() + first, d.boundary.end());
  return d;
}

IntervalDecomposition rotated_to_color(IntervalDecomposition d, Color c) {
  const std::size_t first = d.intervals[0].color == c ? 0 : 1;
  return rotated(std::move(d), first);
}

ElementSet map_set(const std::vector<Element>& perm, ElementSet x) {
  ElementSet out;
  for (Element e : x.elements()) out.insert(perm[e]);
  return out;
}

BasisPair map_pair(const std::vector<Element>& perm, const BasisPair& p) {
  return {map_set(perm, p.red), map_set(perm, p.blue)};
}

WeightFn map_weight(const std::vector<Element>& perm, const WeightFn& w) {
  std::vector<Rational> v(w.size());
  for (int e = 0; e < w.size(); ++e) v[perm[e]] = w(e);
  return WeightFn(std::move(v));
}

ExchangeSequence map_sequence(const std::vector<Element>& perm, const ExchangeSequence& s) {
  ExchangeSequence out;
  for (auto x : s.steps) out.push_back({perm[x.out], perm[x.in]});
  return out;
}

void require_compatible_colorings(const WheelInstance& w, const GraphicMatroid& g, const BasisPair& p1,
                                  const BasisPair& p2) {
  if (!is_valid_pair(g, p1) || !is_valid_pair(g, p2)) {
    throw Error(ErrorCode::NotAColoring, "both pairs must be colorings of wheel(" + std::to_string(w.n) + ")");
  }
  if (p1.united() != g.ground() || p2.united() != g.ground()) {
    throw Error(ErrorCode::IncompatiblePairs, "colorings must cover every edge of the wheel");
  }
}

SequenceReport replay(const GraphicMatroid& g, const BasisPair& p1, const BasisPair& p2, const ExchangeSequence& s,
                      const WeightFn& w) {
  SequenceReport rep = verify_sequence(g, p1, p2, s, w);
  if (!rep.valid) {
    throw Error(ErrorCode::InternalBoundViolation,
                "constructed sequence fails replay at step " + std::to_string(rep.failure_step.value_or(0)));
  }
  return rep;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InternalBoundViolation, what);
}

// ---------------------------------------------------------------------------
// Construction steps on a walker. All of them assume positive orientation of
// the walker's current state unless they re-decompose it.

/// Strictly monotone completion towards a target of equal orientation.
void monotone_completion(Walker& walk, const WheelInstance& w, const BasisPair& target) {
  const Orientation o = orientation(w, walk.current());
  require(o == orientation(w, target), "monotone completion between opposite orientations");
  std::vector<int> pending;
  for (int i = 0; i < w.spokes(); ++i) {
    if (walk.current().color(w.spoke(i)) != target.color(w.spoke(i))) pending.push_back(i);
  }
  while (!pending.empty()) {
    auto it = std::find_if(pending.begin(), pending.end(), [&](int i) {
      return count_spokes(w, walk.current(), walk.current().color(w.spoke(i))) >= 2;
    });
    require(it != pending.end(), "monotone completion stalled");
    walk.exchange(w.spoke(*it), phi_minus_of(w, o, *it));
    pending.erase(it);
  }
}

/// Exchanges every spoke of the interval with its positive phi_minus partner.
void collapse(Walker& walk, const WheelInstance& w, const Interval& iv) {
  for (Element s : iv.spokes) walk.exchange(s, phi_minus_of(w, Orientation::Positive, s));
}

struct SingletonFrame {
  Element a, b, c, d;
};

SingletonFrame singleton_frame(const WheelInstance& w, Element c) {
  const int m = w.spokes();
  return {w.spoke(mod(c - 1, m)), w.rim(mod(c - 1, m)), c, w.rim(c)};
}

ElementSet diff_in(const BasisPair& cur, const BasisPair& target, ElementSet among) {
  return (cur.red ^ target.red) & among;
}

/// Turns a positive two-interval state into one of negative orientation that
/// agrees with `target` wherever the reversal touches it.
void reverse_two(Walker& walk, const WheelInstance& w, const BasisPair& target, const WeightFn& weight) {
  const IntervalDecomposition d = decompose(w, walk.current());
  require(d.intervals.size() == 2 && d.orientation == Orientation::Positive, "reversal expects a positive two-interval state");

  const Interval* single = nullptr;
  for (const auto& iv : d.intervals) {
    if (iv.spokes.size() == 1) single = &iv;
  }

  if (single != nullptr) {
    const auto [a, b, c, dd] = singleton_frame(w, single->spokes[0]);
    const ElementSet diff = diff_in(walk.current(), target, ElementSet{a, b, c, dd});
    if (diff == ElementSet{a, c} || diff == ElementSet{a, dd} || diff == ElementSet{b, dd}) {
      const auto e = diff.elements();
      walk.exchange(e[0], e[1]);
    } else if (diff == ElementSet{b, c}) {
      const Color cc = walk.current().color(c);
      int s = 0;
      while (s < w.spokes() && target.color(w.spoke(s)) != cc) ++s;
      require(s < w.spokes(), "target has no spoke of the singleton's color");
      if (weight(a) >= weight(dd)) {
        walk.exchange(b, dd);
        walk.exchange(w.spoke(s), w.rim(s));
        walk.exchange(c, dd);
      } else {
        walk.exchange(a, c);
        walk.exchange(w.spoke(s), w.rim(s));
        walk.exchange(a, b);
      }
    } else {
      throw Error(ErrorCode::InternalBoundViolation, "unexpected recolor set around the singleton interval");
    }
    return;
  }

  // Both intervals have length at least two.
  const auto& red = d.intervals[0].color == Color::Red ? d.intervals[0] : d.intervals[1];
  const auto& blue = d.intervals[0].color == Color::Red ? d.intervals[1] : d.intervals[0];
  const Element c = red.spokes.back();
  const Element a = blue.spokes.back();
  const ElementSet cd = diff_in(walk.current(), target, ElementSet{c, w.rim(c)});
  const ElementSet ab = diff_in(walk.current(), target, ElementSet{a, w.rim(a)});
  require(cd.size() == 1 && ab.size() == 1, "unexpected recolor set at the interval ends");
  walk.exchange(ab.front(), cd.front());
}

ExchangeSequence two_intervals(const WheelInstance& w, const GraphicMatroid& g, const BasisPair& p1,
                               const BasisPair& p2, const WeightFn& weight) {
  Walker walk(g, p1);
  reverse_two(walk, w, p2, weight);
  monotone_completion(walk, w, p2);
  return walk.sequence();
}

/// Four intervals, positive p1, negative p2. `focus` is the color whose
/// intervals are considered for collapse.
ExchangeSequence four_intervals(const WheelInstance& w, const GraphicMatroid& g, const BasisPair& p1,
                                const BasisPair& p2, const WeightFn& weight, Color focus, bool may_restart) {
  const int m = w.spokes();
  int total = count_spokes(w, p1, focus) + count_spokes(w, p2, focus);
  if (total > m) {
    focus = other(focus);
    total = 2 * m - total;
  }
  const IntervalDecomposition d = rotated_to_color(decompose(w, p1), focus);
  const IntervalWeights iw = interval_weights(d, p2, weight);
  const std::size_t gone = iw.x[2] <= iw.x[0] ? 2 : 0;
  const Interval& left = d.intervals[2 - gone];

  Walker walk(g, p1);
  collapse(walk, w, d.intervals[gone]);
  if (left.spokes.size() == 1) {
    const auto [a, b, c, dd] = singleton_frame(w, left.spokes[0]);
    const ElementSet diff = diff_in(walk.current(), p2, ElementSet{a, b, c, dd});
    if (diff == ElementSet{b, c} && total == m) {
      require(may_restart, "four-interval restart repeated");
      return four_intervals(w, g, p1, p2, weight, other(focus), false);
    }
  }
  reverse_two(walk, w, p2, weight);
  monotone_completion(walk, w, p2);
  return walk.sequence();
}

std::vector<int> collapse_offsets(int intervals) {
  std::vector<int> out;
  if (intervals % 4 == 2) {
    const int k = (intervals - 2) / 4;
    for (int i = 1; i <= k; ++i) out.push_back(2 * i - 1);
    for (int i = k + 1; i <= 2 * k; ++i) out.push_back(2 * i);
  } else {
    const int k = intervals / 4;
    for (int i = 1; i <= k - 1; ++i) out.push_back(2 * i - 1);
    for (int i = k; i <= 2 * k - 1; ++i) out.push_back(2 * i);
  }
  return out;
}

bool admissible(std::span<const Rational> xs, int j) {
  const int n = static_cast<int>(xs.size());
  return n % 4 == 2 ? check_ineq_A(xs, j, (n - 2) / 4) : check_ineq_B(xs, j, n / 4);
}

/// Preconditions shared by solve_le4 and solve_ge6, with reflection so that
/// p1 is positive. Returns the permutation applied (identity or reflection).
std::vector<Element> normalize(const WheelInstance& w, const GraphicMatroid& g, BasisPair& p1, BasisPair& p2) {
  require_compatible_colorings(w, g, p1, p2);
  std::vector<Element> perm(g.ground_size());
  for (Element e = 0; e < g.ground_size(); ++e) perm[e] = e;
  if (orientation(w, p1) == Orientation::Negative) {
    perm = reflection(w);
    p1 = map_pair(perm, p1);
    p2 = map_pair(perm, p2);
  }
  if (orientation(w, p2) == Orientation::Positive) {
    throw Error(ErrorCode::PreconditionViolation, "colorings must have opposite orientations");
  }
  return perm;
}

ExchangeSequence le4_normalized(const WheelInstance& w, const GraphicMatroid& g, const BasisPair& p1,
                                const BasisPair& p2, const WeightFn& weight) {
  const std::size_t q2 = decompose(w, p1).intervals.size();
  if (q2 == 2) return two_intervals(w, g, p1, p2, weight);
  if (q2 == 4) return four_intervals(w, g, p1, p2, weight, Color::Red, true);
  throw Error(ErrorCode::PreconditionViolation, "first coloring has " + std::to_string(q2) + " intervals, expected 2 or 4");
}

ExchangeSequence ge6_normalized(const WheelInstance& w, const GraphicMatroid& g, const BasisPair& p1,
                                const BasisPair& p2, const WeightFn& w1, const WeightFn& w2) {
  const IntervalDecomposition d = rotated_to_color(decompose(w, p1), Color::Red);
  const int q2 = static_cast<int>(d.intervals.size());
  if (q2 < 6) {
    throw Error(ErrorCode::PreconditionViolation, "first coloring has " + std::to_string(q2) + " intervals, expected at least 6");
  }
  const IntervalWeights x1 = interval_weights(d, p2, w1);
  const IntervalWeights x2 = interval_weights(d, p2, w2);
  int chosen = 0;
  for (int j = 1; j <= q2 && chosen == 0; ++j) {
    if (admissible(x1.x, j) && admissible(x2.x, j)) chosen = j;
  }
  require(chosen != 0, "no index satisfies the collapse inequality for both weightings");

  Walker walk(g, p1);
  for (int off : collapse_offsets(q2)) collapse(walk, w, d.intervals[(chosen - 1 + off) % q2]);
  reverse_two(walk, w, p2, w1);
  monotone_completion(walk, w, p2);
  return walk.sequence();
}

}  // namespace

// ---------------------------------------------------------------------------

IntervalDecomposition decompose(const WheelInstance& w, const BasisPair& p) {
  const GraphicMatroid g(w.graph);
  const std::string who = "wheel(" + std::to_string(w.n) + ")";
  if (!g.is_basis(p.red) || !g.is_basis(p.blue) || !(p.red & p.blue).empty()) {
    throw Error(ErrorCode::NotAColoring, "pair is not a coloring of " + who);
  }
  const int m = w.spokes();
  int start = 0;
  while (start < m && p.color(w.spoke(start)) == p.color(w.spoke(mod(start - 1, m)))) ++start;
  if (start == m) throw Error(ErrorCode::NotAColoring, "all spokes share one color");

  IntervalDecomposition d;
  d.pair = p;
  for (int t = 0; t < m; ++t) {
    const int i = mod(start + t, m);
    const Color c = p.color(w.spoke(i));
    if (d.intervals.empty() || d.intervals.back().color != c) d.intervals.push_back({c, {}});
    d.intervals.back().spokes.push_back(w.spoke(i));
  }
  // Rotate so the interval containing s_1 comes first.
  std::size_t first = 0;
  for (std::size_t k = 0; k < d.intervals.size(); ++k) {
    const auto& s = d.intervals[k].spokes;
    if (std::find(s.begin(), s.end(), w.spoke(0)) != s.end()) first = k;
  }
  std::rotate(d.intervals.begin(), d.intervals.begin() + first, d.intervals.end());

  for (const auto& iv : d.intervals) d.boundary.push_back(w.rim(iv.spokes.back()));
  d.orientation =
      p.color(d.boundary[0]) == d.intervals[0].color ? Orientation::Positive : Orientation::Negative;
  d.phi_minus.resize(m);
  d.phi_plus.resize(m);
  for (int i = 0; i < m; ++i) {
    d.phi_minus[i] = phi_minus_of(w, d.orientation, i);
    d.phi_plus[i] = phi_plus_of(w, d.orientation, i);
  }
  return d;
}

Orientation orientation(const WheelInstance& w, const BasisPair& p) { return decompose(w, p).orientation; }

std::vector<Element> reflection(const WheelInstance& w) {
  const int m = w.spokes();
  std::vector<Element> perm(2 * m);
  for (int j = 0; j < m; ++j) {
    perm[w.spoke(j)] = w.spoke(m - 1 - j);
    perm[w.rim(j)] = w.rim(mod(m - j - 2, m));
  }
  return perm;
}

IntervalWeights interval_weights(const IntervalDecomposition& d, const BasisPair& p2, const WeightFn& w) {
  IntervalWeights out;
  for (const auto& iv : d.intervals) {
    Rational x{0};
    Rational y{0};
    for (Element s : iv.spokes) {
      for (Element e : {s, d.phi_minus[s]}) {
        (d.pair.color(e) == p2.color(e) ? x : y) += w(e);
      }
    }
    out.x.push_back(x);
    out.y.push_back(y);
  }
  return out;
}

namespace {

Rational cyclic_sum(std::span<const Rational> xs, int j, int from, int to, int stride_offset) {
  const int n = static_cast<int>(xs.size());
  Rational s{0};
  for (int i = from; i <= to; ++i) s += xs[mod(j - 1 + 2 * i + stride_offset, n)];
  return s;
}

}  // namespace

bool check_ineq_A(std::span<const Rational> xs, int j, int k) {
  if (k < 1 || xs.size() != static_cast<std::size_t>(4 * k + 2)) {
    throw Error(ErrorCode::DomainError, "inequality A needs 4k+2 intervals with k >= 1");
  }
  const Rational lhs = cyclic_sum(xs, j, 1, k, -1) + cyclic_sum(xs, j, k + 1, 2 * k, 0);
  const Rational rhs = cyclic_sum(xs, j, 0, k, 0) + cyclic_sum(xs, j, k, 2 * k, 1);
  return lhs <= rhs;
}

bool check_ineq_B(std::span<const Rational> xs, int j, int k) {
  if (k < 1 || xs.size() != static_cast<std::size_t>(4 * k)) {
    throw Error(ErrorCode::DomainError, "inequality B needs 4k intervals with k >= 1");
  }
  const Rational lhs = cyclic_sum(xs, j, 1, k - 1, -1) + cyclic_sum(xs, j, k, 2 * k - 1, 0);
  const Rational rhs = cyclic_sum(xs, j, 0, k - 1, 0) + cyclic_sum(xs, j, k - 1, 2 * k - 1, 1);
  return lhs <= rhs;
}

ExchangeSequence monotone_same_orientation(const WheelInstance& w, const BasisPair& p1, const BasisPair& p2) {
  const GraphicMatroid g(w.graph);
  require_compatible_colorings(w, g, p1, p2);
  if (orientation(w, p1) != orientation(w, p2)) {
    throw Error(ErrorCode::OrientationMismatch, "colorings have opposite orientations");
  }
  Walker walk(g, p1);
  monotone_completion(walk, w, p2);
  const SequenceReport rep = replay(g, p1, p2, walk.sequence(), WeightFn::unit(g.ground_size()));
  require(rep.monotone, "same-orientation sequence is not monotone");
  return walk.sequence();
}

ExchangeSequence solve_le4(const WheelInstance& w, const BasisPair& p1, const BasisPair& p2, const WeightFn& weight) {
  const GraphicMatroid g(w.graph);
  BasisPair q1 = p1;
  BasisPair q2 = p2;
  const auto perm = normalize(w, g, q1, q2);
  const ExchangeSequence s = map_sequence(perm, le4_normalized(w, g, q1, q2, map_weight(perm, weight)));
  const SequenceReport rep = replay(g, p1, p2, s, weight);
  require(static_cast<int>(rep.length) <= w.spokes(), "sequence longer than n-1");
  require(rep.weight <= weight.sum(g.ground()), "sequence heavier than w(E)");
  require(rep.max_usage <= 2, "an edge is used more than twice");
  return s;
}

ExchangeSequence solve_ge6(const WheelInstance& w, const BasisPair& p1, const BasisPair& p2, const WeightFn& w1,
                           const WeightFn& w2) {
  const GraphicMatroid g(w.graph);
  BasisPair q1 = p1;
  BasisPair q2 = p2;
  const auto perm = normalize(w, g, q1, q2);
  const ExchangeSequence s =
      map_sequence(perm, ge6_normalized(w, g, q1, q2, map_weight(perm, w1), map_weight(perm, w2)));
  for (const WeightFn* wf : {&w1, &w2}) {
    const SequenceReport rep = replay(g, p1, p2, s, *wf);
    require(rep.weight <= wf->sum(g.ground()), "sequence heavier than w(E)");
    require(rep.max_usage <= 2, "an edge is used more than twice");
  }
  return s;
}

ExchangeSequence solve_wheel(const WheelInstance& w, const BasisPair& p1, const BasisPair& p2, const WeightFn& weight) {
  const GraphicMatroid g(w.graph);
  require_compatible_colorings(w, g, p1, p2);
  if (weight.size() != g.ground_size()) throw Error(ErrorCode::InvalidInput, "weight vector has wrong length");
  ExchangeSequence s;
  try {
    if (orientation(w, p1) == orientation(w, p2)) {
      s = monotone_same_orientation(w, p1, p2);
    } else if (decompose(w, p1).intervals.size() <= 4) {
      s = solve_le4(w, p1, p2, weight);
    } else {
      s = solve_ge6(w, p1, p2, weight, WeightFn::unit(g.ground_size()));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InfeasibleExchange) throw Error(ErrorCode::InternalBoundViolation, e.what());
    throw;
  }
  const SequenceReport rep = replay(g, p1, p2, s, weight);
  require(static_cast<int>(rep.length) <= w.spokes(), "sequence longer than n-1");
  require(rep.weight <= weight.sum(g.ground()), "sequence heavier than w(E)");
  require(rep.max_usage <= 2, "an edge is used more than twice");
  return s;
}

}  // namespace mex::wheels
