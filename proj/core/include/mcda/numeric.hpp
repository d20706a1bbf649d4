#pragma once

#include <string>
#include <string_view>

#include "mcda/error.hpp"

namespace mcda {

/// Shortest decimal string that parses back to the same double. Always uses
/// '.' decimals regardless of locale.
std::string format_double(double value);

/// Fixed three-decimal rendering, rounding halves away from zero; matches
/// the precision of the published tables.
std::string format_fixed3(double value);

/// Parses a number accepting both '.' and ',' decimal marks. The whole
/// field must be consumed; anything else raises ParseError with `context`.
double parse_number(std::string_view field, std::string_view context);

/// Strips surrounding ASCII whitespace.
std::string_view trim(std::string_view s);

}  // namespace mcda
