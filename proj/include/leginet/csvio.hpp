#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace leginet::csv {

/// Quote a field if it contains a comma, quote, or newline; `force` quotes
/// unconditionally (titles and surfaces are always quoted in our exports).
std::string quote(std::string_view field, bool force = false);

std::string row(const std::vector<std::string>& fields);

/// Parse one CSV line (RFC-4180 style quoting). Embedded newlines are not
/// supported; our writers never produce them.
std::vector<std::string> parse_row(std::string_view line);

/// Split file content into lines, dropping a trailing empty line.
std::vector<std::string> lines(std::string_view content);

}  // namespace leginet::csv
