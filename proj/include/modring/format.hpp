#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modring/interp.hpp"
#include "modring/poly.hpp"

namespace modring {

/// Decimal integer with optional sign. Throws parse_error otherwise.
Integer parse_integer(std::string_view text);

/// Comma-separated integers; surrounding whitespace per item is tolerated.
/// Empty input parses as the empty list.
std::vector<Integer> parse_integer_list(std::string_view text);

/// Comma-separated "x:y" pairs, e.g. "1:1,2:4,3:2".
std::vector<Point> parse_points(std::string_view text);

/// "a, b, c" (display) or "a,b,c" (machine list), matching the input format.
std::string join(const std::vector<Integer>& values, std::string_view separator);

/// Ascending comma-separated coefficients, the CLI input format.
/// The zero polynomial prints as "0".
std::string coefficient_list(const Polynomial& f);
std::string coefficient_list(const std::vector<Integer>& coefficients);

/// Descending display with caret powers: "t^2 + t + 1". Zero prints "0".
std::string pretty(const Polynomial& f);

}  // namespace modring
