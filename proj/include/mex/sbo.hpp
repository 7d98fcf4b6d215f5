#pragma once

#include <map>
#include <vector>

#include "mex/core.hpp"

namespace mex::sbo {

/// phi1: R1 -> B1 and phi2: R2 -> B2. The caller vouches for the exchange
/// property; every step is still checked on replay.
struct SboBijections {
  std::map<Element, Element> phi1;
  std::map<Element, Element> phi2;
};

/// Color classes of the graph on R1 ∪ B1 with edges e-phi1(e) and f-phi2(f).
/// In each component, S takes the class holding its smallest R1 element.
struct SboBipartition {
  ElementSet s;
  ElementSet t;
};

/// Throws Error(InvalidInput) for maps that are not bijections between the
/// right sets, Error(NotBipartite) if the union graph has an odd cycle.
SboBipartition sbo_bipartition(const BasisPair& p1, const BasisPair& p2, const SboBijections& bij);

struct SboResult {
  ExchangeSequence sequence;
  /// w(R1 △ S) + w(R2 △ S) and the same for T.
  Rational weight_via_s{0};
  Rational weight_via_t{0};
  bool via_s = true;
};

/// Route through (S, T) or (T, S), whichever is lighter (S on ties). Throws
/// Error(InfeasibleExchange) when a step fails on replay.
SboResult solve_sbo(const Matroid& m, const BasisPair& p1, const BasisPair& p2, const SboBijections& bij,
                    const WeightFn& w);

/// Within each part, the i-th red element maps to the i-th blue element.
/// Throws Error(DomainError) when a part holds different numbers of each.
SboBijections partition_bijection(const std::vector<ElementSet>& parts, const BasisPair& p1, const BasisPair& p2);

}  // namespace mex::sbo
