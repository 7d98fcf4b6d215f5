#include "mex/split.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace mex::split {

namespace {

/// The elementary component on its own ground set, with global element ids.
class ComponentMatroid : public Matroid {
 public:
  ComponentMatroid(const ElementarySplitInstance& inst, std::vector<std::string> labels)
      : Matroid(std::move(labels)), inst_(inst) {}
  int rank() const override { return inst_.rank; }
  bool is_independent(ElementSet x) const override {
    return x.subset_of(inst_.ground) && split_is_independent(inst_, x);
  }
  ElementSet ground() const override { return inst_.ground; }

 private:
  const ElementarySplitInstance& inst_;
};

std::vector<std::string> labels_covering(const std::vector<std::string>& given, ElementSet ground) {
  std::vector<std::string> out = given;
  const int need = ground.empty() ? 0 : ground.elements().back() + 1;
  for (int e = static_cast<int>(out.size()); e < need; ++e) out.push_back("e" + std::to_string(e + 1));
  return out;
}

BasisPair restrict(const BasisPair& p, ElementSet ground) { return {p.red & ground, p.blue & ground}; }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InternalBoundViolation, what);
}

/// Longest monotone path lengths from each visited red set.
class MonotoneSearch {
 public:
  MonotoneSearch(const Matroid& m, const BasisPair& target) : m_(m), target_(target) {}

  int depth(const BasisPair& cur) {
    if (auto it = memo_.find(cur.red.bits()); it != memo_.end()) return it->second;
    int best = 0;
    for (const auto& [x, next] : moves(cur)) best = std::max(best, 1 + depth(next));
    memo_[cur.red.bits()] = best;
    return best;
  }

  std::vector<std::pair<Exchange, BasisPair>> moves(const BasisPair& cur) const {
    std::vector<std::pair<Exchange, BasisPair>> out;
    for (Element e : (cur.red & target_.blue).elements()) {
      for (Element f : (cur.blue & target_.red).elements()) {
        if (is_feasible_exchange(m_, cur, e, f)) {
          out.push_back({{e, f}, {cur.red.without(e).with(f), cur.blue.without(f).with(e)}});
        }
      }
    }
    return out;
  }

  /// Every end pair reachable along a longest path, each with the first path found.
  void collect(const BasisPair& cur, ExchangeSequence& path, std::vector<MonotonePrefix>& out,
               std::unordered_set<std::uint64_t>& seen) {
    const int d = depth(cur);
    if (d == 0) {
      if (seen.insert(cur.red.bits()).second) out.push_back({path, cur});
      return;
    }
    for (const auto& [x, next] : moves(cur)) {
      if (depth(next) != d - 1) continue;
      path.push_back(x);
      collect(next, path, out, seen);
      path.steps.pop_back();
    }
  }

 private:
  const Matroid& m_;
  BasisPair target_;
  std::unordered_map<std::uint64_t, int> memo_;
};

/// Depth-first search for the reuse completion with a fixed z.
class CompletionSearch {
 public:
  CompletionSearch(const Matroid& m, const BasisPair& target, ElementSet once, Element z, int length)
      : m_(m), target_(target), once_(once), z_(z), length_(length) {}

  bool run(const BasisPair& cur, ElementSet used, int z_uses) {
    const int step = static_cast<int>(path_.size());
    if (step == length_) return cur == target_ && used == once_ && z_uses == 2;
    const Key key{cur.red.bits(), used.bits(), z_uses};
    if (dead_.count(key) != 0) return false;
    ElementSet avail = once_ - used;
    if (z_uses < 2) avail.insert(z_);
    for (Element e : (cur.red & avail).elements()) {
      for (Element f : (cur.blue & avail).elements()) {
        if (!is_feasible_exchange(m_, cur, e, f)) continue;
        ElementSet u = used;
        int zu = z_uses;
        for (Element g : {e, f}) {
          if (g == z_) {
            ++zu;
          } else {
            u.insert(g);
          }
        }
        path_.push_back({e, f});
        if (run({cur.red.without(e).with(f), cur.blue.without(f).with(e)}, u, zu)) return true;
        path_.steps.pop_back();
      }
    }
    dead_.insert(key);
    return false;
  }

  const ExchangeSequence& path() const { return path_; }

 private:
  const Matroid& m_;
  BasisPair target_;
  ElementSet once_;
  Element z_;
  int length_;
  ExchangeSequence path_;
  using Key = std::tuple<std::uint64_t, std::uint64_t, int>;
  std::set<Key> dead_;
};

std::vector<Element> by_weight(ElementSet pool, const WeightFn& w) {
  std::vector<Element> out = pool.elements();
  std::stable_sort(out.begin(), out.end(), [&](Element a, Element b) { return w(a) < w(b); });
  return out;
}

ExchangeSequence complete(const Matroid& m, const BasisPair& p1, const BasisPair& p2, const WeightFn& w,
                          ElementSet pool) {
  const ElementSet once = p1.red ^ p2.red;
  const int length = (p1.red & p2.blue).size() + 1;
  for (Element z : by_weight(pool - once, w)) {
    CompletionSearch search(m, p2, once, z, length);
    if (search.run(p1, {}, 0)) return search.path();
  }
  throw Error(ErrorCode::CompletionNotFound, "no reuse completion of length " + std::to_string(length));
}

ExchangeSequence solve_elementary(const ComponentMatroid& m, const BasisPair& p1, const BasisPair& p2,
                                  const WeightFn& w) {
  const auto prefixes = longest_monotone_prefixes(m, p1, p2);
  if (prefixes.front().end == p2) return prefixes.front().sequence;
  const ElementSet pool = (p1.red & p2.red) | (p1.blue & p2.blue);
  for (const MonotonePrefix& pre : prefixes) {
    try {
      ExchangeSequence s = pre.sequence;
      s.append(complete(m, pre.end, p2, w, pool));
      return s;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CompletionNotFound) throw;
    }
  }
  throw Error(ErrorCode::CompletionNotFound, "no longest monotone prefix admits a reuse completion");
}

}  // namespace

TightSets tight_sets(const ElementarySplitInstance& inst, ElementSet f) {
  TightSets t{f, {}};
  for (std::size_t i = 0; i < inst.hyperedges.size(); ++i) {
    if ((f & inst.hyperedges[i]).size() == inst.bounds[i]) t.hyperedges.push_back(static_cast<int>(i));
  }
  return t;
}

ExchangeSequence solve_uniform_monotone(int rank, ElementSet ground, const BasisPair& p1, const BasisPair& p2) {
  for (const BasisPair* p : {&p1, &p2}) {
    if (p->red.size() != rank || p->blue.size() != rank || !(p->red & p->blue).empty() ||
        !p->united().subset_of(ground)) {
      throw Error(ErrorCode::NotABasis, "pair is not a coloring of the uniform component");
    }
  }
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "pairs cover different sets");
  const auto out = (p1.red & p2.blue).elements();
  const auto in = (p1.blue & p2.red).elements();
  ExchangeSequence s;
  for (std::size_t i = 0; i < out.size(); ++i) s.push_back({out[i], in[i]});
  return s;
}

MonotonePrefix longest_monotone_prefix(const Matroid& m, const BasisPair& p1, const BasisPair& p2) {
  return longest_monotone_prefixes(m, p1, p2).front();
}

std::vector<MonotonePrefix> longest_monotone_prefixes(const Matroid& m, const BasisPair& p1, const BasisPair& p2) {
  MonotoneSearch search(m, p2);
  ExchangeSequence path;
  std::vector<MonotonePrefix> out;
  std::unordered_set<std::uint64_t> seen;
  search.collect(p1, path, out, seen);
  return out;
}

ExchangeSequence completion_with_reuse(const ElementarySplitInstance& inst, const BasisPair& p1, const BasisPair& p2,
                                       const WeightFn& w, std::optional<ElementSet> pool) {
  const ComponentMatroid m(inst, labels_covering(inst.labels, inst.ground));
  if (!is_valid_pair(m, p1) || !is_valid_pair(m, p2)) throw Error(ErrorCode::NotABasis, "pairs must be disjoint bases");
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "pairs cover different sets");
  return complete(m, p1, p2, w, pool.value_or((p1.red & p2.red) | (p1.blue & p2.blue)));
}

ExchangeSequence solve_split(const SplitDirectSum& d, const BasisPair& p1, const BasisPair& p2, const WeightFn& w) {
  const SplitMatroid m(d);
  if (w.size() != m.ground_size()) throw Error(ErrorCode::InvalidInput, "weight vector has wrong length");
  if (!is_valid_pair(m, p1) || !is_valid_pair(m, p2)) throw Error(ErrorCode::NotABasis, "pairs must be disjoint bases");
  if (!compatible(p1, p2)) throw Error(ErrorCode::IncompatiblePairs, "pairs cover different sets");

  ExchangeSequence s;
  if (d.elementary) {
    const ComponentMatroid c(*d.elementary, labels_covering(d.labels, d.elementary->ground));
    s.append(solve_elementary(c, restrict(p1, c.ground()), restrict(p2, c.ground()), w));
  }
  for (const UniformComponent& u : d.uniforms) {
    s.append(solve_uniform_monotone(u.rank, u.ground, restrict(p1, u.ground), restrict(p2, u.ground)));
  }

  const SequenceReport rep = verify_sequence(m, p1, p2, s, w);
  require(rep.valid, "split sequence fails replay");
  const int r = m.rank();
  const int common = (p1.red & p2.red).size();
  require(static_cast<int>(rep.length) <= std::min(r, r - common + 1), "split sequence too long");
  require(rep.weight <= w.sum(p1.united()), "split sequence heavier than w(R1 ∪ B1)");
  require(rep.max_usage <= 2, "an element is used more than twice");
  return s;
}

}  // namespace mex::split
