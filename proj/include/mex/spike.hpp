#pragma once

#include <utility>
#include <vector>

#include "mex/core.hpp"
#include "mex/instances.hpp"

namespace mex::spike {

/// Leg permutation and per-leg x/y swaps acting on elements, plus optional
/// color and pair-role swaps acting on colorings and sequences.
///
/// `map` sends original objects to relabeled ones. If `seq` is valid from
/// map(P1, P2).first to map(P1, P2).second on map(K), then unmap(seq) is valid
/// from P1 to P2 on K with the same length, weight and usage profile.
struct SpikeRelabeling {
  /// legs[i-1]: image of leg i, 1-based.
  std::vector<int> legs;
  /// flips[i-1]: x_i and y_i trade places before the leg permutation.
  std::vector<bool> flips;
  bool swap_colors = false;
  bool swap_roles = false;

  static SpikeRelabeling identity(int r);

  Element map(Element e) const;
  Element unmap(Element e) const;
  ElementSet map(ElementSet x) const;
  ElementSet unmap(ElementSet x) const;
  /// Element map followed by the color swap; ignores `swap_roles`.
  BasisPair map(const BasisPair& p) const;
  std::pair<BasisPair, BasisPair> map(const BasisPair& p1, const BasisPair& p2) const;
  /// Relabeled spike; the C3 family is materialized as an explicit list.
  SpikeInstance map(const SpikeInstance& k) const;
  WeightFn map(const WeightFn& w) const;
  ExchangeSequence map(const ExchangeSequence& seq) const;
  ExchangeSequence unmap(const ExchangeSequence& seq) const;
  SpikeRelabeling inverse() const;
};

struct BasisClass {
  enum class Kind {
    Transversal,     // tip deleted: one element per leg
    NonTransversal,  // tip deleted: leg k doubled, leg l empty
    Type1,           // t and the partner of the missing element present, leg l empty
    Type2,           // t present, partner absent
    Type3,           // t absent, partner present
    Type4,           // t and partner absent, leg k doubled
  };
  Kind kind = Kind::Transversal;
  /// 1-based leg indices; 0 when not applicable.
  int k = 0;
  int l = 0;

  friend bool operator==(const BasisClass&, const BasisClass&) = default;
};

/// Classifies a basis of K with `missing` deleted. Throws Error(NotABasis).
BasisClass classify_basis(const SpikeInstance& k, Element missing, ElementSet z);

/// Pairs over S - t: length at most r, weight at most w(S - t), usage at most 2.
ExchangeSequence solve_missing_tip(const SpikeInstance& k, const BasisPair& p1, const BasisPair& p2,
                                   const WeightFn& w);

/// Pairs over S - e for a leg element e: same bounds with w(S - e).
ExchangeSequence solve_missing_leg_element(const SpikeInstance& k, const BasisPair& p1, const BasisPair& p2,
                                           const WeightFn& w);

/// Dispatches on the element missing from R1 ∪ B1.
ExchangeSequence solve_spike(const SpikeInstance& k, const BasisPair& p1, const BasisPair& p2, const WeightFn& w);

}  // namespace mex::spike
