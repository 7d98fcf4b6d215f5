#include "mex/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

#include "mex/wheel.hpp"

namespace mex::oracle {

void check_limits(const Matroid& m, const Limits& limits) {
  if (m.ground_size() > limits.max_ground || m.rank() > limits.max_rank) {
    throw Error(ErrorCode::TooLarge, "instance with " + std::to_string(m.ground_size()) + " elements and rank " +
                                         std::to_string(m.rank()) + " exceeds the oracle limits");
  }
}

namespace {

void extend(const Matroid& m, const std::vector<Element>& pool, std::size_t next, ElementSet cur,
            std::vector<ElementSet>& out) {
  if (cur.size() == m.rank()) {
    out.push_back(cur);
    return;
  }
  const std::size_t need = static_cast<std::size_t>(m.rank() - cur.size());
  for (std::size_t i = next; i + need <= pool.size(); ++i) {
    const ElementSet grown = cur.with(pool[i]);
    if (m.is_independent(grown)) extend(m, pool, i + 1, grown, out);
  }
}

std::vector<ElementSet> bases_within(const Matroid& m, ElementSet within) {
  std::vector<ElementSet> out;
  extend(m, (within & m.ground()).elements(), 0, ElementSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

void require_compatible(const Matroid& m, const BasisPair& p1, const BasisPair& p2) {
  if (!is_valid_pair(m, p1) || !is_valid_pair(m, p2)) throw Error(ErrorCode::NotABasis, "pair sides must be disjoint bases");
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "pairs cover different unions");
}

}  // namespace

std::vector<ElementSet> enumerate_bases(const Matroid& m, const Limits& limits) {
  check_limits(m, limits);
  return bases_within(m, m.ground());
}

std::vector<BasisPair> enumerate_compatible_pairs(const Matroid& m, ElementSet united, const Limits& limits) {
  check_limits(m, limits);
  std::vector<BasisPair> out;
  if (united.size() != 2 * m.rank()) return out;
  for (ElementSet r : bases_within(m, united)) {
    if (m.is_basis(united - r)) out.push_back({r, united - r});
  }
  return out;
}

std::vector<std::vector<BasisPair>> enumerate_pair_classes(const Matroid& m, const Limits& limits) {
  const std::vector<ElementSet> bases = enumerate_bases(m, limits);
  std::set<ElementSet> unions;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      if ((bases[i] & bases[j]).empty()) unions.insert(bases[i] | bases[j]);
    }
  }
  std::vector<std::vector<BasisPair>> out;
  for (ElementSet u : unions) out.push_back(enumerate_compatible_pairs(m, u, limits));
  return out;
}

// ---------------------------------------------------------------------------

std::vector<PairGraph::Arc> PairGraph::neighbors(ElementSet red) const {
  std::vector<Arc> out;
  const ElementSet blue = united_ - red;
  for (Element e : red.elements()) {
    for (Element f : blue.elements()) {
      const ElementSet r2 = red.without(e).with(f);
      if (m_.is_independent(r2) && m_.is_independent(blue.without(f).with(e))) out.push_back({{e, f}, r2});
    }
  }
  return out;
}

std::unordered_map<std::uint64_t, int> PairGraph::bfs(ElementSet source, std::optional<ElementSet> target,
                                                      std::optional<int> max_depth) const {
  std::unordered_map<std::uint64_t, int> dist{{source.bits(), 0}};
  std::deque<ElementSet> queue{source};
  while (!queue.empty()) {
    const ElementSet cur = queue.front();
    queue.pop_front();
    const int d = dist[cur.bits()];
    if (target && cur == *target) break;
    if (max_depth && d >= *max_depth) continue;
    for (const Arc& a : neighbors(cur)) {
      if (dist.emplace(a.red.bits(), d + 1).second) queue.push_back(a.red);
    }
  }
  return dist;
}

std::unordered_map<std::uint64_t, Rational> PairGraph::dijkstra(ElementSet source, const WeightFn& w,
                                                                std::optional<ElementSet> target) const {
  using Item = std::pair<Rational, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::unordered_map<std::uint64_t, Rational> dist{{source.bits(), Rational(0)}};
  std::unordered_set<std::uint64_t> settled;
  heap.emplace(Rational(0), source.bits());
  while (!heap.empty()) {
    auto [d, bits] = heap.top();
    heap.pop();
    if (!settled.insert(bits).second) continue;
    if (target && bits == target->bits()) break;
    for (const Arc& a : neighbors(ElementSet(bits))) {
      const Rational nd = d + w(a.exchange.out) + w(a.exchange.in);
      auto it = dist.find(a.red.bits());
      if (it == dist.end() || nd < it->second) {
        dist[a.red.bits()] = nd;
        heap.emplace(nd, a.red.bits());
      }
    }
  }
  // Drop tentative labels that were never settled.
  for (auto it = dist.begin(); it != dist.end();) {
    it = settled.count(it->first) != 0 ? std::next(it) : dist.erase(it);
  }
  return dist;
}

std::optional<int> exchange_distance(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                                     const Limits& limits) {
  check_limits(m, limits);
  require_compatible(m, p1, p2);
  const auto dist = PairGraph(m, p1.united()).bfs(p1.red, p2.red);
  auto it = dist.find(p2.red.bits());
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

std::optional<Rational> weighted_exchange_distance(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                                                   const WeightFn& w, const Limits& limits) {
  check_limits(m, limits);
  require_compatible(m, p1, p2);
  const auto dist = PairGraph(m, p1.united()).dijkstra(p1.red, w, p2.red);
  auto it = dist.find(p2.red.bits());
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

bool exists_monotone_sequence(const Matroid& m, const BasisPair& p1, const BasisPair& p2, const Limits& limits) {
  check_limits(m, limits);
  require_compatible(m, p1, p2);
  const ElementSet outs = p1.red & p2.blue;
  const ElementSet ins = p1.blue & p2.red;
  const PairGraph graph(m, p1.united());
  std::unordered_set<std::uint64_t> dead;
  std::function<bool(ElementSet)> dfs = [&](ElementSet red) {
    if (red == p2.red) return true;
    if (dead.count(red.bits()) != 0) return false;
    for (const auto& a : graph.neighbors(red)) {
      // An element that left red is blue and outside `ins`, so it never returns.
      if (outs.contains(a.exchange.out) && ins.contains(a.exchange.in) && dfs(a.red)) return true;
    }
    dead.insert(red.bits());
    return false;
  };
  return dfs(p1.red);
}

std::optional<ExchangeSequence> shortest_sequence(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                                                  const Limits& limits) {
  check_limits(m, limits);
  require_compatible(m, p1, p2);
  const PairGraph graph(m, p1.united());
  const auto dist = graph.bfs(p1.red, p2.red);
  if (dist.count(p2.red.bits()) == 0) return std::nullopt;
  // Arcs are symmetric, so walk back from the target along decreasing labels.
  std::vector<Exchange> back;
  ElementSet cur = p2.red;
  while (cur != p1.red) {
    const int d = dist.at(cur.bits());
    for (const auto& a : graph.neighbors(cur)) {
      auto it = dist.find(a.red.bits());
      if (it != dist.end() && it->second == d - 1) {
        back.push_back({a.exchange.in, a.exchange.out});
        cur = a.red;
        break;
      }
    }
  }
  ExchangeSequence out;
  out.steps.assign(back.rbegin(), back.rend());
  return out;
}

// ---------------------------------------------------------------------------

SweepReport conjecture_sweep(const Matroid& m, const std::vector<WeightFn>& weightings, const Limits& limits) {
  SweepReport rep;
  rep.rank = m.rank();
  rep.weightings = weightings.size();
  for (const auto& cls : enumerate_pair_classes(m, limits)) {
    ++rep.pair_classes;
    if (cls.empty()) continue;
    const ElementSet united = cls.front().united();
    const PairGraph graph(m, united);
    for (const BasisPair& p1 : cls) {
      const auto dist = graph.bfs(p1.red);
      std::vector<std::unordered_map<std::uint64_t, Rational>> wdist;
      for (const WeightFn& w : weightings) wdist.push_back(graph.dijkstra(p1.red, w));
      for (const BasisPair& p2 : cls) {
        ++rep.ordered_pairs;
        auto it = dist.find(p2.red.bits());
        if (it == dist.end()) {
          rep.violations.push_back({p1, p2, std::nullopt, std::nullopt, 0, "unreachable"});
          continue;
        }
        const int d = it->second;
        if (!rep.max_distance_witness || d > rep.max_distance) {
          rep.max_distance = d;
          rep.max_distance_witness = std::make_pair(p1, p2);
        }
        if (rep.rank > 0) rep.max_length_ratio = std::max(rep.max_length_ratio, Rational(d, rep.rank));
        if (d > rep.rank) rep.violations.push_back({p1, p2, d, std::nullopt, 0, "distance exceeds rank"});
        for (std::size_t k = 0; k < weightings.size(); ++k) {
          const Rational wd = wdist[k].at(p2.red.bits());
          const Rational total = weightings[k].sum(united);
          if (total > 0) rep.max_weight_ratio = std::max(rep.max_weight_ratio, wd / total);
          if (wd > total) rep.violations.push_back({p1, p2, d, wd, k, "weighted distance exceeds w(union)"});
        }
      }
    }
  }
  return rep;
}

WeightFn random_weighting(int ground_size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(0, 12);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Rational> v;
  for (int e = 0; e < ground_size; ++e) v.emplace_back(num(rng), den(rng));
  return WeightFn(std::move(v));
}

std::vector<WeightFn> random_weightings(int ground_size, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WeightFn> out;
  for (int i = 0; i < count; ++i) out.push_back(random_weighting(ground_size, rng));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Every coloring of the wheel, built from spoke colors and orientation.
std::vector<BasisPair> wheel_colorings(const WheelInstance& w) {
  const int m = w.spokes();
  std::vector<BasisPair> out;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
    for (bool positive : {true, false}) {
      ElementSet red;
      for (int i = 0; i < m; ++i) {
        const bool si = (mask >> i) & 1U;
        const bool sn = (mask >> ((i + 1) % m)) & 1U;
        if (si) red.insert(w.spoke(i));
        const bool rim_red = si == sn ? !si : (positive ? si : sn);
        if (rim_red) red.insert(w.rim(i));
      }
      out.push_back({red, ElementSet::full(2 * m) - red});
    }
  }
  return out;
}

}  // namespace

GapWitness gap_search(const WheelInstance& w) {
  if (w.n > 13) throw Error(ErrorCode::TooLarge, "gap search is limited to n <= 13");
  const int m = w.spokes();
  const int target = (m + 3) / 4;
  const GraphicMatroid g(w.graph);
  const PairGraph graph(g, g.ground());
  const auto colorings = wheel_colorings(w);
  std::vector<wheels::Orientation> orient;
  for (const auto& p : colorings) orient.push_back(wheels::orientation(w, p));

  for (std::size_t i = 0; i < colorings.size(); ++i) {
    const BasisPair& p1 = colorings[i];
    std::optional<std::unordered_map<std::uint64_t, int>> ball;
    for (std::size_t j = 0; j < colorings.size(); ++j) {
      const BasisPair& p2 = colorings[j];
      if (orient[i] == orient[j] || (p1.red & p2.red).size() != m - 2) continue;
      if (!ball) ball = graph.bfs(p1.red, std::nullopt, target - 1);
      if (ball->count(p2.red.bits()) != 0) continue;
      const auto dist = graph.bfs(p1.red, p2.red);
      return {p1, p2, 2, dist.at(p2.red.bits())};
    }
  }
  throw Error(ErrorCode::NotFound, "no opposite-orientation pair at distance >= " + std::to_string(target) +
                                       " in wheel(" + std::to_string(w.n) + ")");
}

bool every_sequence_reuses(const Matroid& m, const BasisPair& p1, const BasisPair& p2, Element a, Element b) {
  require_compatible(m, p1, p2);
  const PairGraph graph(m, p1.united());
  // State: red set plus one bit per watched element recording a past use.
  using State = std::pair<std::uint64_t, int>;
  std::set<State> seen{{p1.red.bits(), 0}};
  std::deque<State> queue{{p1.red.bits(), 0}};
  while (!queue.empty()) {
    auto [bits, used] = queue.front();
    queue.pop_front();
    if (bits == p2.red.bits()) return false;
    for (const auto& arc : graph.neighbors(ElementSet(bits))) {
      int next = used;
      bool over = false;
      for (Element e : {arc.exchange.out, arc.exchange.in}) {
        const int bit = e == a ? 1 : e == b ? 2 : 0;
        if (bit == 0) continue;
        if ((next & bit) != 0) over = true;
        next |= bit;
      }
      if (over) continue;
      if (seen.insert({arc.red.bits(), next}).second) queue.emplace_back(arc.red.bits(), next);
    }
  }
  return true;
}

TwoWeightWitness two_weight_counterexample(const Matroid& m, const Limits& limits) {
  for (const auto& cls : enumerate_pair_classes(m, limits)) {
    if (cls.empty()) continue;
    const auto elems = cls.front().united().elements();
    for (const BasisPair& p1 : cls) {
      for (const BasisPair& p2 : cls) {
        if (p1 == p2) continue;
        for (std::size_t i = 0; i < elems.size(); ++i) {
          for (std::size_t j = i + 1; j < elems.size(); ++j) {
            if (every_sequence_reuses(m, p1, p2, elems[i], elems[j])) return {p1, p2, elems[i], elems[j]};
          }
        }
      }
    }
  }
  throw Error(ErrorCode::NotFound, "every compatible pair admits a sequence using each of any two elements at most once");
}

}  // namespace mex::oracle
