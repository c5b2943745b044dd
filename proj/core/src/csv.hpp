#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace plansim::csv {

// Splits one CSV record. Handles double-quoted fields with "" escapes; no
// embedded newlines.
std::vector<std::string> split_line(std::string_view line);

// Quotes a field only when it contains a delimiter, quote or whitespace edge.
std::string quote(std::string_view field);

// Strips a trailing '\r' and a leading UTF-8 BOM.
std::string_view trim_record(std::string_view line, bool first_line);

}  // namespace plansim::csv
