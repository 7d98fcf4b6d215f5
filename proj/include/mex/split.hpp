#pragma once

#include <optional>
#include <vector>

#include "mex/core.hpp"
#include "mex/instances.hpp"

namespace mex::split {

/// Indices i with |F ∩ H_i| = r_i. Diagnostic only; the solver does not use it.
struct TightSets {
  ElementSet set;
  std::vector<int> hyperedges;
};

TightSets tight_sets(const ElementarySplitInstance& inst, ElementSet f);

/// Pairs R1 ∩ B2 with B1 ∩ R2 in index order. Throws Error(IncompatiblePairs)
/// or Error(NotABasis) for pairs that are not colorings of U(rank, ground).
ExchangeSequence solve_uniform_monotone(int rank, ElementSet ground, const BasisPair& p1, const BasisPair& p2);

struct MonotonePrefix {
  ExchangeSequence sequence;
  BasisPair end;
};

/// A longest sequence of feasible exchanges (e, f) with e ∈ R ∩ B2 and
/// f ∈ B ∩ R2, found by exhaustive search. Ties go to the lexicographically
/// smallest sequence.
MonotonePrefix longest_monotone_prefix(const Matroid& m, const BasisPair& p1, const BasisPair& p2);

/// One prefix per distinct end pair among all longest prefixes; the first
/// entry matches longest_monotone_prefix.
std::vector<MonotonePrefix> longest_monotone_prefixes(const Matroid& m, const BasisPair& p1, const BasisPair& p2);

/// Sequence from p1 to p2 of length |R1 ∩ B2| + 1 that uses one z ∈ pool twice,
/// each element of R1 △ R2 once and nothing else. Candidates are tried by
/// increasing weight, then index. `pool` defaults to (R1 ∩ R2) ∪ (B1 ∩ B2).
/// Throws Error(CompletionNotFound).
ExchangeSequence completion_with_reuse(const ElementarySplitInstance& inst, const BasisPair& p1, const BasisPair& p2,
                                       const WeightFn& w, std::optional<ElementSet> pool = {});

/// Length at most min{r, r - |R1 ∩ R2| + 1}, weight at most w(R1 ∪ B1), usage at most 2.
ExchangeSequence solve_split(const SplitDirectSum& d, const BasisPair& p1, const BasisPair& p2, const WeightFn& w);

}  // namespace mex::split
