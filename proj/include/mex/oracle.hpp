#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

#include "mex/core.hpp"
#include "mex/instances.hpp"

namespace mex::oracle {

/// Hard guards against accidental exponential blow-ups.
struct Limits {
  int max_ground = 16;
  int max_rank = 8;
};

/// Throws Error(TooLarge) when `m` exceeds `limits`.
void check_limits(const Matroid& m, const Limits& limits);

std::vector<ElementSet> enumerate_bases(const Matroid& m, const Limits& limits = {});

/// All colorings (R, union \ R) with both sides bases, ordered by R.
std::vector<BasisPair> enumerate_compatible_pairs(const Matroid& m, ElementSet united, const Limits& limits = {});

/// Every pair of disjoint bases, grouped by union.
std::vector<std::vector<BasisPair>> enumerate_pair_classes(const Matroid& m, const Limits& limits = {});

/// States are colorings of a fixed union, keyed by the red set. Arcs are
/// feasible exchanges, generated on demand.
class PairGraph {
 public:
  PairGraph(const Matroid& m, ElementSet united) : m_(m), united_(united) {}

  struct Arc {
    Exchange exchange;
    ElementSet red;
  };

  std::vector<Arc> neighbors(ElementSet red) const;

  /// Unweighted distances from `source` to every reachable state. Stops early
  /// once `target` is settled, or beyond `max_depth` when given.
  std::unordered_map<std::uint64_t, int> bfs(ElementSet source, std::optional<ElementSet> target = {},
                                             std::optional<int> max_depth = {}) const;
  /// Weighted distances with arc weight w(e) + w(f).
  std::unordered_map<std::uint64_t, Rational> dijkstra(ElementSet source, const WeightFn& w,
                                                       std::optional<ElementSet> target = {}) const;

  ElementSet united() const { return united_; }

 private:
  const Matroid& m_;
  ElementSet united_;
};

/// nullopt encodes an unreachable target.
std::optional<int> exchange_distance(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                                     const Limits& limits = {});
std::optional<Rational> weighted_exchange_distance(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                                                   const WeightFn& w, const Limits& limits = {});

/// Whether p1 reaches p2 using only exchanges (e, f) with e ∈ R1 ∩ B2 and
/// f ∈ B1 ∩ R2, each element at most once.
bool exists_monotone_sequence(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                              const Limits& limits = {});

/// Shortest sequence between two states, or nullopt when unreachable.
std::optional<ExchangeSequence> shortest_sequence(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                                                  const Limits& limits = {});

struct SweepViolation {
  BasisPair p1;
  BasisPair p2;
  std::optional<int> distance;
  std::optional<Rational> weighted_distance;
  std::size_t weighting = 0;
  std::string what;
};

struct SweepReport {
  std::size_t pair_classes = 0;
  std::size_t ordered_pairs = 0;
  std::size_t weightings = 0;
  int rank = 0;
  int max_distance = 0;
  /// max over pairs of distance / r.
  Rational max_length_ratio{0};
  /// max over pairs and weightings of weighted distance / w(union).
  Rational max_weight_ratio{0};
  std::optional<std::pair<BasisPair, BasisPair>> max_distance_witness;
  std::vector<SweepViolation> violations;
};

/// Checks, for every pair of compatible colorings and every weighting, that
/// the weighted distance is at most w(union) and the distance at most r.
SweepReport conjecture_sweep(const Matroid& m, const std::vector<WeightFn>& weightings, const Limits& limits = {});

/// Seeded random weightings with small nonnegative rational entries.
std::vector<WeightFn> random_weightings(int ground_size, int count, std::uint64_t seed);
WeightFn random_weighting(int ground_size, std::mt19937_64& rng);

struct GapWitness {
  BasisPair p1;
  BasisPair p2;
  int lower_bound = 0;
  int distance = 0;
};

/// Searches wheel(n) for colorings of opposite orientation with
/// (n-1) - |R1 ∩ R2| = 2 and distance at least ceil((n-1)/4).
/// Throws Error(NotFound) when none exists, Error(TooLarge) for n > 13.
GapWitness gap_search(const WheelInstance& w);

struct TwoWeightWitness {
  BasisPair p1;
  BasisPair p2;
  Element first;
  Element second;
};

/// Minimum over sequences p1 -> p2 of max(usage(a), usage(b)) is at least 2,
/// decided exactly on the state graph augmented with usage counters.
bool every_sequence_reuses(const Matroid& m, const BasisPair& p1, const BasisPair& p2, Element a, Element b);

/// Finds compatible colorings and two elements such that every transforming
/// sequence uses one of them at least twice. Throws Error(NotFound).
TwoWeightWitness two_weight_counterexample(const Matroid& m, const Limits& limits = {});

}  // namespace mex::oracle
