#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace mex {

using Rational = boost::rational<std::int64_t>;

/// Always formats as "p/q" in lowest terms, e.g. "2/1".
std::string format_rational(const Rational& value);

/// Accepts "p/q" or an integer literal. Throws Error(InvalidInput) otherwise.
Rational parse_rational(std::string_view text);

}  // namespace mex
