#include "mex/spike.hpp"

#include <algorithm>
#include <memory>

#include "walker.hpp"

namespace mex::spike {

SpikeRelabeling SpikeRelabeling::identity(int r) {
  SpikeRelabeling rho;
  for (int i = 1; i <= r; ++i) rho.legs.push_back(i);
  rho.flips.assign(r, false);
  return rho;
}

Element SpikeRelabeling::map(Element e) const {
  if (e == 0) return 0;
  const int i = (e + 1) / 2;
  const bool is_x = (e % 2 == 1) != flips[i - 1];
  const int j = legs[i - 1];
  return is_x ? 2 * j - 1 : 2 * j;
}

Element SpikeRelabeling::unmap(Element e) const { return inverse().map(e); }

ElementSet SpikeRelabeling::map(ElementSet x) const {
  ElementSet out;
  for (Element e : x.elements()) out.insert(map(e));
  return out;
}

ElementSet SpikeRelabeling::unmap(ElementSet x) const { return inverse().map(x); }

BasisPair SpikeRelabeling::map(const BasisPair& p) const {
  const BasisPair q{map(p.red), map(p.blue)};
  return swap_colors ? q.swapped() : q;
}

std::pair<BasisPair, BasisPair> SpikeRelabeling::map(const BasisPair& p1, const BasisPair& p2) const {
  if (swap_roles) return {map(p2), map(p1)};
  return {map(p1), map(p2)};
}

SpikeInstance SpikeRelabeling::map(const SpikeInstance& k) const {
  SpikeInstance out;
  out.r = k.r;
  out.rule = SpikeInstance::C3Rule::Explicit;
  for (ElementSet z : k.c3_members()) out.c3.push_back(map(z));
  std::sort(out.c3.begin(), out.c3.end());
  out.labels.resize(k.labels.size());
  for (Element e = 0; e < k.ground_size(); ++e) out.labels[map(e)] = k.labels[e];
  return out;
}

WeightFn SpikeRelabeling::map(const WeightFn& w) const {
  std::vector<Rational> v(w.size());
  for (Element e = 0; e < w.size(); ++e) v[map(e)] = w(e);
  return WeightFn(std::move(v));
}

ExchangeSequence SpikeRelabeling::map(const ExchangeSequence& seq) const {
  ExchangeSequence out;
  for (auto x : seq.steps) out.push_back({map(x.out), map(x.in)});
  if (swap_colors) out = swap_colors_sequence(out);
  if (swap_roles) out = reverse_sequence(out);
  return out;
}

ExchangeSequence SpikeRelabeling::unmap(const ExchangeSequence& seq) const { return inverse().map(seq); }

SpikeRelabeling SpikeRelabeling::inverse() const {
  SpikeRelabeling inv = *this;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    inv.legs[legs[i] - 1] = static_cast<int>(i) + 1;
    inv.flips[legs[i] - 1] = flips[i];
  }
  return inv;
}

// ---------------------------------------------------------------------------

BasisClass classify_basis(const SpikeInstance& k, Element missing, ElementSet z) {
  const DeletionView m(std::make_shared<SpikeMatroid>(k), missing);
  if (!m.is_basis(z)) throw Error(ErrorCode::NotABasis, "set " + m.format(z) + " is not a basis");
  BasisClass c;
  for (int i = 1; i <= k.r; ++i) {
    const int meet = (z & k.leg(i)).size();
    if (meet == 2) c.k = i;
    if (meet == 0 && !k.leg(i).contains(missing)) c.l = i;
  }
  using Kind = BasisClass::Kind;
  if (missing == k.tip()) {
    c.kind = c.k == 0 ? Kind::Transversal : Kind::NonTransversal;
    return c;
  }
  const bool has_t = z.contains(k.tip());
  const bool has_partner = z.contains(k.partner(missing));
  if (has_t && has_partner) {
    c.kind = Kind::Type1;
  } else if (has_t || has_partner) {
    c = {has_t ? Kind::Type2 : Kind::Type3, 0, 0};
  } else {
    c.kind = Kind::Type4;
  }
  return c;
}

namespace {

using detail::Walker;

/// Logical legs 1..r over the actual spike; realized as a relabeling that
/// sends actual elements to logical ones.
class Frame {
 public:
  /// `fixed` lists (logical, actual) leg assignments; remaining logical slots
  /// take the remaining actual legs in increasing order.
  Frame(const SpikeInstance& k, std::initializer_list<std::pair<int, int>> fixed)
      : k_(k), rho_(SpikeRelabeling::identity(k.r)) {
    std::vector<int> order(k.r + 1, 0);
    std::vector<bool> used(k.r + 1, false);
    for (auto [logical, actual] : fixed) {
      order[logical] = actual;
      used[actual] = true;
    }
    int next = 1;
    for (int i = 1; i <= k.r; ++i) {
      if (order[i] != 0) continue;
      while (used[next]) ++next;
      order[i] = next;
      used[next] = true;
    }
    for (int i = 1; i <= k.r; ++i) rho_.legs[order[i] - 1] = i;
  }

  Element x(int i) const { return rho_.unmap(k_.x(i)); }
  Element y(int i) const { return rho_.unmap(k_.y(i)); }
  int logical(int actual_leg) const { return rho_.legs[actual_leg - 1]; }

  /// Makes `e`, an element of logical leg i, play the role of x_i.
  void make_x(int i, Element e) {
    const int a = k_.leg_of(e);
    if (logical(a) != i) throw Error(ErrorCode::InternalBoundViolation, "element outside the requested leg");
    rho_.flips[a - 1] = e != k_.x(a);
  }

  /// The element of logical leg i that is red in p.
  Element red_of(int i, const BasisPair& p) const { return p.red.contains(x(i)) ? x(i) : y(i); }
  Element blue_of(int i, const BasisPair& p) const { return p.blue.contains(x(i)) ? x(i) : y(i); }

  bool differs(int i, const BasisPair& p1, const BasisPair& p2) const { return p1.color(x(i)) != p2.color(x(i)); }

 private:
  const SpikeInstance& k_;
  SpikeRelabeling rho_;
};

struct Context {
  const SpikeInstance& k;
  const Matroid& m;
  Element missing;
  const WeightFn& w;
};

bool mixed(const SpikeInstance& k, int actual_leg, const BasisPair& p) {
  return (p.red & k.leg(actual_leg)).size() == 1;
}

// ---------------------------------------------------------------------------
// Tip deleted.

ExchangeSequence tip_core(const Context& c, const BasisPair& p1, const BasisPair& p2);

ExchangeSequence tip_both_non_transversal(const Context& c, const BasisPair& p1, const BasisPair& p2,
                                          const BasisClass& c1, const BasisClass& c2) {
  const int r = c.k.r;
  Frame f(c.k, {{1, c1.k}, {r, c1.l}});
  const int kk = f.logical(c2.k);
  const int ll = f.logical(c2.l);
  Walker walk(c.m, p1);
  auto middles = [&](std::initializer_list<int> skip) {
    for (int i = 2; i <= r - 1; ++i) {
      if (std::find(skip.begin(), skip.end(), i) == skip.end() && f.differs(i, p1, p2)) walk.exchange(f.x(i), f.y(i));
    }
  };

  if (kk == 1) {
    middles({ll});
    if (ll != r) walk.exchange(f.red_of(ll, p1), f.red_of(r, p2));
  } else if (kk <= r - 1) {
    f.make_x(1, f.blue_of(1, p2));
    f.make_x(r, f.blue_of(r, p2));
    f.make_x(kk, f.red_of(kk, p1));
    walk.exchange(f.x(1), f.y(kk));
    middles({kk, ll});
    if (ll != r) walk.exchange(f.red_of(ll, walk.current()), f.y(r));
  } else if (ll != 1) {
    walk.exchange(f.red_of(ll, p1), f.x(r));
    middles({ll});
    walk.exchange(f.blue_of(1, p2), f.y(r));
  } else {
    int j = 2;
    while (j <= r - 1 && !f.differs(j, p1, p2)) ++j;
    if (j <= r - 1) {
      f.make_x(j, f.red_of(j, p1));
      walk.exchange(f.x(1), f.y(j));
      middles({j});
      walk.exchange(f.y(1), f.x(r));
      walk.exchange(f.x(j), f.y(r));
    } else {
      // Every middle leg agrees; one element of leg 2 is used twice.
      const Element blue = f.blue_of(2, p1);
      const Element red = f.red_of(2, p1);
      if (c.w(blue) <= c.w(red)) {
        walk.exchange(f.x(1), blue);
        walk.exchange(f.y(1), f.x(r));
        walk.exchange(blue, f.y(r));
      } else {
        walk.exchange(f.x(r), red);
        walk.exchange(f.y(r), f.x(1));
        walk.exchange(red, f.y(1));
      }
    }
  }
  return walk.sequence();
}

ExchangeSequence tip_both_transversal(const Context& c, const BasisPair& p1, const BasisPair& p2) {
  std::vector<int> diff;
  for (int i = 1; i <= c.k.r; ++i) {
    if ((p1.red & c.k.leg(i)) != (p2.red & c.k.leg(i))) diff.push_back(i);
  }
  Walker walk(c.m, p1);
  if (diff.size() == 1) walk.exchange(c.k.x(diff[0]), c.k.y(diff[0]));
  if (diff.size() < 2) return walk.sequence();

  Frame f(c.k, {{1, diff[0]}, {2, diff[1]}});
  f.make_x(1, f.red_of(1, p1));
  f.make_x(2, f.red_of(2, p1));
  walk.exchange(f.x(1), f.y(2));
  for (int i = 3; i <= c.k.r; ++i) {
    if (f.differs(i, p1, p2)) walk.exchange(f.x(i), f.y(i));
  }
  walk.exchange(f.x(2), f.y(1));
  return walk.sequence();
}

ExchangeSequence tip_mixed(const Context& c, const BasisPair& p1, const BasisPair& p2, const BasisClass& c1) {
  const int r = c.k.r;
  Frame f(c.k, {{1, c1.k}, {r, c1.l}});
  Walker walk(c.m, p1);
  for (int i = 2; i <= r - 1; ++i) {
    if (f.differs(i, p1, p2)) walk.exchange(f.x(i), f.y(i));
  }
  walk.exchange(f.blue_of(1, p2), f.red_of(r, p2));
  return walk.sequence();
}

ExchangeSequence tip_core(const Context& c, const BasisPair& p1, const BasisPair& p2) {
  using Kind = BasisClass::Kind;
  const BasisClass c1 = classify_basis(c.k, c.missing, p1.red);
  const BasisClass c2 = classify_basis(c.k, c.missing, p2.red);
  if (c1.kind == Kind::NonTransversal && c2.kind == Kind::NonTransversal) {
    return tip_both_non_transversal(c, p1, p2, c1, c2);
  }
  if (c1.kind == Kind::Transversal && c2.kind == Kind::Transversal) return tip_both_transversal(c, p1, p2);
  if (c1.kind == Kind::Transversal) return reverse_sequence(tip_mixed(c, p2, p1, c2));
  return tip_mixed(c, p1, p2, c1);
}

// ---------------------------------------------------------------------------
// Leg element deleted; logical leg 1 holds it as x_1.

ExchangeSequence leg_core(const Context& c, const BasisPair& p1, const BasisPair& p2);

ExchangeSequence leg_same_color(const Context& c, const BasisPair& p1, const BasisPair& p2) {
  // Here t and y_1 are red in p1, so R1 leaves exactly one leg empty.
  const int r = c.k.r;
  const Element t = c.k.tip();
  const Element y1 = c.k.partner(c.missing);
  const BasisClass c1 = classify_basis(c.k, c.missing, p1.red);
  const BasisClass c2 = classify_basis(c.k, c.missing, p2.red);
  Frame f(c.k, {{1, c.k.leg_of(c.missing)}, {r, c1.l}});
  f.make_x(1, c.missing);

  Walker walk(c.m, p1);
  for (int i = 2; i <= r - 1; ++i) {
    if (mixed(c.k, c.k.leg_of(f.x(i)), p2) && f.differs(i, p1, p2)) walk.exchange(f.x(i), f.y(i));
  }

  const bool t_red = p2.red.contains(t);
  const bool y1_red = p2.red.contains(y1);
  if (t_red && y1_red) {
    const int ll = f.logical(c2.l);
    if (ll != r) walk.exchange(f.red_of(ll, p1), f.red_of(r, p2));
  } else if (t_red != y1_red) {
    walk.exchange(t_red ? y1 : t, f.red_of(r, p2));
  } else {
    const int ll = f.logical(c2.k);
    if (ll == r) {
      if (!walk.try_exchanges({{y1, f.x(r)}, {t, f.y(r)}})) {
        walk.exchange(y1, f.y(r));
        walk.exchange(t, f.x(r));
      }
    } else {
      f.make_x(ll, f.red_of(ll, p1));
      f.make_x(r, f.red_of(r, p2));
      if (!walk.try_exchanges({{y1, f.x(r)}, {t, f.y(ll)}})) {
        if (c.w(f.x(ll)) >= c.w(f.y(r))) {
          walk.exchange(y1, f.y(r));
          walk.exchange(f.y(ll), t);
          walk.exchange(f.x(r), f.y(r));
        } else {
          walk.exchange(f.x(ll), f.x(r));
          walk.exchange(y1, f.y(ll));
          walk.exchange(f.x(ll), t);
        }
      }
    }
  }
  return walk.sequence();
}

ExchangeSequence leg_different_colors(const Context& c, const BasisPair& p1, const BasisPair& p2) {
  // Here y_1 is red and t blue in p1; every other leg is split in both pairs.
  const int r = c.k.r;
  const Element t = c.k.tip();
  const Element y1 = c.k.partner(c.missing);
  const int home = c.k.leg_of(c.missing);
  int first_diff = 0;
  for (int i = 1; i <= r && first_diff == 0; ++i) {
    if (i != home && (p1.red & c.k.leg(i)) != (p2.red & c.k.leg(i))) first_diff = i;
  }
  Walker walk(c.m, p1);
  if (first_diff == 0) {
    if (p1 != p2) walk.exchange(y1, t);
    return walk.sequence();
  }
  Frame f(c.k, {{1, home}, {2, first_diff}});
  f.make_x(1, c.missing);
  f.make_x(2, f.blue_of(2, p1));
  auto middles = [&] {
    for (int i = 3; i <= r; ++i) {
      if (f.differs(i, p1, p2)) walk.exchange(f.x(i), f.y(i));
    }
  };
  if (p2.blue.contains(y1)) {
    walk.exchange(f.x(2), y1);
    middles();
    walk.exchange(f.y(2), t);
  } else if (c.w(y1) <= c.w(t)) {
    walk.exchange(y1, f.x(2));
    middles();
    walk.exchange(y1, f.y(2));
  } else {
    walk.exchange(t, f.y(2));
    middles();
    walk.exchange(t, f.x(2));
  }
  return walk.sequence();
}

ExchangeSequence leg_core(const Context& c, const BasisPair& p1, const BasisPair& p2) {
  const Element t = c.k.tip();
  const Element y1 = c.k.partner(c.missing);
  const bool same1 = p1.color(t) == p1.color(y1);
  const bool same2 = p2.color(t) == p2.color(y1);
  if (same1 || same2) {
    if (!same1) return reverse_sequence(leg_core(c, p2, p1));
    if (p1.blue.contains(t)) return swap_colors_sequence(leg_core(c, p1.swapped(), p2.swapped()));
    return leg_same_color(c, p1, p2);
  }
  if (p1.blue.contains(y1)) return swap_colors_sequence(leg_core(c, p1.swapped(), p2.swapped()));
  return leg_different_colors(c, p1, p2);
}

// ---------------------------------------------------------------------------

Element missing_element(const SpikeInstance& k, const BasisPair& p1, const BasisPair& p2) {
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "pairs cover different unions");
  const ElementSet rest = ElementSet::full(k.ground_size()) - p1.united();
  if (rest.size() != 1 || !p1.united().subset_of(ElementSet::full(k.ground_size()))) {
    throw Error(ErrorCode::IncompatiblePairs, "pairs must cover all but one element of the spike");
  }
  return rest.front();
}

ExchangeSequence solve_checked(const SpikeInstance& k, const BasisPair& p1, const BasisPair& p2, const WeightFn& w,
                               Element missing) {
  if (k.r < 3) throw Error(ErrorCode::DomainError, "spikes need r >= 3");
  if (w.size() != k.ground_size()) throw Error(ErrorCode::InvalidInput, "weight vector has wrong length");
  const DeletionView m(std::make_shared<SpikeMatroid>(k), missing);
  if (!is_valid_pair(m, p1) || !is_valid_pair(m, p2)) throw Error(ErrorCode::NotABasis, "pair sides must be disjoint bases");

  const Context c{k, m, missing, w};
  ExchangeSequence seq;
  try {
    seq = missing == k.tip() ? tip_core(c, p1, p2) : leg_core(c, p1, p2);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InfeasibleExchange) throw Error(ErrorCode::InternalBoundViolation, e.what());
    throw;
  }
  const SequenceReport rep = verify_sequence(m, p1, p2, seq, w);
  auto require = [](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::InternalBoundViolation, what);
  };
  require(rep.valid, "constructed spike sequence fails replay");
  require(static_cast<int>(rep.length) <= k.r, "spike sequence longer than r");
  require(rep.weight <= w.sum(m.ground()), "spike sequence heavier than w(S - s)");
  require(rep.max_usage <= 2, "an element is used more than twice");
  return seq;
}

}  // namespace

ExchangeSequence solve_missing_tip(const SpikeInstance& k, const BasisPair& p1, const BasisPair& p2,
                                   const WeightFn& w) {
  if (missing_element(k, p1, p2) != k.tip()) {
    throw Error(ErrorCode::IncompatiblePairs, "pairs must miss the tip");
  }
  return solve_checked(k, p1, p2, w, k.tip());
}

ExchangeSequence solve_missing_leg_element(const SpikeInstance& k, const BasisPair& p1, const BasisPair& p2,
                                           const WeightFn& w) {
  const Element missing = missing_element(k, p1, p2);
  if (missing == k.tip()) throw Error(ErrorCode::IncompatiblePairs, "pairs must miss a leg element");
  return solve_checked(k, p1, p2, w, missing);
}

ExchangeSequence solve_spike(const SpikeInstance& k, const BasisPair& p1, const BasisPair& p2, const WeightFn& w) {
  return solve_checked(k, p1, p2, w, missing_element(k, p1, p2));
}

}  // namespace mex::spike
