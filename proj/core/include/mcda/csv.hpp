#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcda/error.hpp"

namespace mcda::csv {

/// Parses RFC-4180-style CSV: comma-delimited, double-quoted fields may
/// contain commas, newlines and doubled quotes. Accepts LF and CRLF.
std::vector<std::vector<std::string>> parse(std::string_view text, std::string_view source_name);

/// Quotes a field when it contains a comma, quote or newline.
std::string escape(std::string_view field);

void append_row(std::string& out, std::span<const std::string> fields);

}  // namespace mcda::csv
