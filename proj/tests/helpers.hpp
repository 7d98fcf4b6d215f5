#pragma once

#include <initializer_list>
#include <string>

#include "mex/core.hpp"

namespace mex::testing {

inline ElementSet set_of(const Matroid& m, std::initializer_list<const char*> labels) {
  ElementSet s;
  for (const char* l : labels) s.insert(m.find(l));
  return s;
}

inline BasisPair pair_of(const Matroid& m, std::initializer_list<const char*> red,
                         std::initializer_list<const char*> blue) {
  return {set_of(m, red), set_of(m, blue)};
}

/// Red side as given, blue side the rest of the ground set.
inline BasisPair coloring(const Matroid& m, std::initializer_list<const char*> red) {
  const ElementSet r = set_of(m, red);
  return {r, m.ground() - r};
}

inline ExchangeSequence seq_of(const Matroid& m, std::initializer_list<std::pair<const char*, const char*>> steps) {
  ExchangeSequence s;
  for (auto [e, f] : steps) s.push_back({m.find(e), m.find(f)});
  return s;
}

}  // namespace mex::testing
