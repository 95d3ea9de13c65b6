#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace trop {

/// Element of the value monoid (Q, +, <=), always kept in lowest terms.
using ValueRat = boost::rational<std::int64_t>;

/// "p" when the denominator is 1, otherwise "p/q".
std::string format_value(const ValueRat& v);

/// Accepts "p", "-p", "p/q". Throws Error(ParseError).
ValueRat parse_value(std::string_view text);

}  // namespace trop
