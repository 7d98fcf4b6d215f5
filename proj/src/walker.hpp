#pragma once

#include <initializer_list>
#include <utility>

#include "mex/core.hpp"

namespace mex::detail {

/// Replays exchanges as they are constructed. A step that is not a feasible
/// exchange signals a construction bug and raises InternalBoundViolation.
class Walker {
 public:
  Walker(const Matroid& m, BasisPair start) : m_(m), cur_(start) {}

  /// Exchanges a and b, whichever of them is currently red leaving.
  void exchange(Element a, Element b) {
    Exchange x{};
    if (cur_.red.contains(a) && cur_.blue.contains(b)) {
      x = {a, b};
    } else if (cur_.red.contains(b) && cur_.blue.contains(a)) {
      x = {b, a};
    } else {
      throw Error(ErrorCode::InternalBoundViolation,
                  "attempted exchange of same-colored " + m_.label(a) + " and " + m_.label(b));
    }
    if (!is_feasible_exchange(m_, cur_, x.out, x.in)) {
      throw Error(ErrorCode::InternalBoundViolation, "constructed exchange (" + m_.label(x.out) + "," +
                                                         m_.label(x.in) + ") is infeasible at R=" +
                                                         m_.format(cur_.red));
    }
    cur_ = {cur_.red.without(x.out).with(x.in), cur_.blue.without(x.in).with(x.out)};
    seq_.push_back(x);
  }

  /// Whether exchanging a and b is feasible in the current state.
  bool feasible(Element a, Element b) const {
    if (cur_.red.contains(a)) return is_feasible_exchange(m_, cur_, a, b);
    return is_feasible_exchange(m_, cur_, b, a);
  }

  /// Applies all steps if each is feasible in turn; otherwise leaves the
  /// walker untouched and returns false.
  bool try_exchanges(std::initializer_list<std::pair<Element, Element>> steps) {
    const BasisPair saved = cur_;
    const std::size_t len = seq_.size();
    for (auto [a, b] : steps) {
      if (!feasible(a, b)) {
        cur_ = saved;
        seq_.steps.resize(len);
        return false;
      }
      exchange(a, b);
    }
    return true;
  }

  const BasisPair& current() const { return cur_; }
  const ExchangeSequence& sequence() const { return seq_; }
  const Matroid& matroid() const { return m_; }

 private:
  const Matroid& m_;
  BasisPair cur_;
  ExchangeSequence seq_;
};

}  // namespace mex::detail
