#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mex/element_set.hpp"
#include "mex/error.hpp"
#include "mex/rational.hpp"

namespace mex {

/// Independence oracle over the ground set {0, ..., ground_size() - 1}.
///
/// Implementations must satisfy the independence axioms: the empty set is
/// independent, subsets of independent sets are independent, and every
/// independent set has at most rank() elements with some set of that size
/// independent. Labels are cosmetic; identity is by index.
class Matroid {
 public:
  explicit Matroid(std::vector<std::string> labels);
  virtual ~Matroid() = default;

  int ground_size() const { return static_cast<int>(labels_.size()); }
  virtual int rank() const = 0;
  virtual bool is_independent(ElementSet x) const = 0;

  /// Elements that may appear in independent sets. Deletion views shrink it.
  virtual ElementSet ground() const { return ElementSet::full(ground_size()); }

  bool is_basis(ElementSet x) const { return x.size() == rank() && is_independent(x); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element e) const { return labels_.at(e); }
  /// Throws Error(InvalidInput) for unknown labels.
  Element find(std::string_view label) const;
  std::string format(ElementSet x) const;

 private:
  std::vector<std::string> labels_;
};

enum class Color { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

/// Ordered pair (R, B) of disjoint sets; a coloring when both are bases.
struct BasisPair {
  ElementSet red;
  ElementSet blue;

  ElementSet united() const { return red | blue; }
  Color color(Element e) const { return red.contains(e) ? Color::Red : Color::Blue; }
  BasisPair swapped() const { return {blue, red}; }

  friend bool operator==(const BasisPair&, const BasisPair&) = default;
};

/// Symmetric exchange: `out` leaves the red side, `in` enters it.
struct Exchange {
  Element out;
  Element in;

  friend bool operator==(const Exchange&, const Exchange&) = default;
};

struct ExchangeSequence {
  std::vector<Exchange> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  void push_back(Exchange x) { steps.push_back(x); }
  void append(const ExchangeSequence& tail) { steps.insert(steps.end(), tail.steps.begin(), tail.steps.end()); }

  friend bool operator==(const ExchangeSequence&, const ExchangeSequence&) = default;
};

/// Nonnegative rational weight per element.
class WeightFn {
 public:
  WeightFn() = default;
  /// Throws Error(DomainError) on negative entries.
  explicit WeightFn(std::vector<Rational> values);

  static WeightFn unit(int ground_size) { return WeightFn(std::vector<Rational>(ground_size, Rational(1))); }
  static WeightFn indicator(int ground_size, Element e);

  const Rational& operator()(Element e) const { return values_.at(e); }
  Rational sum(ElementSet x) const;
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

struct SequenceReport {
  bool valid = false;
  /// Index of the first infeasible step; equals the sequence length when every
  /// step was feasible but the replay ended at the wrong pair.
  std::optional<std::size_t> failure_step;
  std::size_t length = 0;
  Rational weight{0};
  int max_usage = 0;
  /// Usage count indexed by element.
  std::vector<int> usage;
  bool monotone = false;
};

bool is_feasible_exchange(const Matroid& m, const BasisPair& p, Element e, Element f);

/// Throws Error(InfeasibleExchange) when the exchange is not feasible.
BasisPair apply_exchange(const Matroid& m, const BasisPair& p, Exchange x);

bool is_valid_pair(const Matroid& m, const BasisPair& p);
bool compatible(const BasisPair& p1, const BasisPair& p2);

/// Replays `seq` from `p1`. Throws Error(IncompatiblePairs) if the unions differ.
SequenceReport verify_sequence(const Matroid& m, const BasisPair& p1, const BasisPair& p2,
                               const ExchangeSequence& seq, const WeightFn& w);

/// (r - |R1 ∩ R2|, w(R1 △ R2)).
std::pair<int, Rational> lower_bounds(const BasisPair& p1, const BasisPair& p2, const WeightFn& w);

/// Valid from p2 to p1 whenever `seq` is valid from p1 to p2.
ExchangeSequence reverse_sequence(const ExchangeSequence& seq);
/// Valid between the color-swapped pairs whenever `seq` is valid between the originals.
ExchangeSequence swap_colors_sequence(const ExchangeSequence& seq);

std::string format_sequence(const Matroid& m, const ExchangeSequence& seq);

}  // namespace mex
