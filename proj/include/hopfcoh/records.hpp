#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hopfcoh {

/// Flat machine-readable record: ordered key=value pairs, one record per
/// line, values free of whitespace (scalars use the zeta grammar).
using Record = std::vector<std::pair<std::string, std::string>>;

std::string render_records(const std::vector<Record>& records);
std::vector<Record> parse_records(std::string_view text);

/// Human tables: records grouped by their leading "record" field, columns
/// aligned. Pure presentation over the records stream.
std::string render_table(const std::vector<Record>& records);

}  // namespace hopfcoh
