#include "mcda/numeric.hpp"

#include <charconv>
#include <cmath>

namespace mcda {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_fixed3(double value) {
  const double rounded = std::round(value * 1000.0) / 1000.0;
  char buffer[64];
  const auto result =
      std::to_chars(buffer, buffer + sizeof(buffer), rounded, std::chars_format::fixed, 3);
  return std::string(buffer, result.ptr);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::string_view context) {
  std::string cleaned(trim(field));
  for (char& c : cleaned) {
    if (c == ',') c = '.';
  }
  double value = 0.0;
  const char* begin = cleaned.data();
  const char* end = begin + cleaned.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc() || result.ptr != end || cleaned.empty()) {
    throw ParseError(detail::cat(context, ": cannot parse number '", field, "'"));
  }
  if (!std::isfinite(value)) {
    throw ParseError(detail::cat(context, ": non-finite number '", field, "'"));
  }
  return value;
}

}  // namespace mcda
