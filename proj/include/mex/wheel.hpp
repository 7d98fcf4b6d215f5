#pragma once

#include <span>
#include <vector>

#include "mex/core.hpp"
#include "mex/instances.hpp"

namespace mex::wheels {

/// Positive: every interval is followed, in index-increasing direction, by a
/// boundary rim edge of its own color.
enum class Orientation { Positive, Negative };

struct Interval {
  Color color;
  /// Spokes in positive cyclic order; may wrap past s_{n-1}.
  std::vector<Element> spokes;
};

struct IntervalDecomposition {
  BasisPair pair;
  /// Positive cyclic order, starting with the interval that contains s_1.
  std::vector<Interval> intervals;
  Orientation orientation;
  /// Rim edge following each interval in positive direction.
  std::vector<Element> boundary;
  /// Indexed by zero-based spoke index. For positive orientation
  /// phi_minus(s_i) = r_{i-1} and phi_plus(s_i) = r_i; swapped for negative.
  std::vector<Element> phi_minus;
  std::vector<Element> phi_plus;
};

struct IntervalWeights {
  std::vector<Rational> x;
  std::vector<Rational> y;
};

/// Throws Error(NotAColoring) unless both classes are spanning trees of W.
IntervalDecomposition decompose(const WheelInstance& w, const BasisPair& p);

Orientation orientation(const WheelInstance& w, const BasisPair& p);

/// Automorphism v_i -> v_{n-i}; an involution that reverses orientation.
std::vector<Element> reflection(const WheelInstance& w);

/// x_i / y_i: weight of I_i ∪ phi_minus(I_i) whose color agrees / disagrees
/// between d.pair and p2.
IntervalWeights interval_weights(const IntervalDecomposition& d, const BasisPair& p2, const WeightFn& w);

/// The collapse inequality for 4k+2 intervals at 1-based cyclic index j.
/// Throws Error(DomainError) unless xs.size() == 4k+2 and k >= 1.
bool check_ineq_A(std::span<const Rational> xs, int j, int k);
/// The collapse inequality for 4k intervals. Requires xs.size() == 4k, k >= 1.
bool check_ineq_B(std::span<const Rational> xs, int j, int k);

/// Strictly monotone sequence between colorings of equal orientation.
/// Throws Error(OrientationMismatch) otherwise.
ExchangeSequence monotone_same_orientation(const WheelInstance& w, const BasisPair& p1, const BasisPair& p2);

/// Opposite orientations, p1 with two or four intervals. Length at most n-1,
/// weight at most w(E), every edge used at most twice.
ExchangeSequence solve_le4(const WheelInstance& w, const BasisPair& p1, const BasisPair& p2, const WeightFn& weight);

/// Opposite orientations, p1 with at least six intervals. Weight at most
/// w_i(E) under both weightings, every edge used at most twice.
ExchangeSequence solve_ge6(const WheelInstance& w, const BasisPair& p1, const BasisPair& p2, const WeightFn& w1,
                           const WeightFn& w2);

/// Any pair of compatible colorings: length at most n-1, weight at most
/// w(E), every edge used at most twice. The result is replay-verified.
ExchangeSequence solve_wheel(const WheelInstance& w, const BasisPair& p1, const BasisPair& p2, const WeightFn& weight);

}  // namespace mex::wheels
