#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Minimal comma-separated helpers shared by the file formats. No quoting:
// a field may not contain a comma.
namespace frecency::csv {

struct Line {
    std::size_t number;  // 1-based
    std::string_view text;
};

// Splits text into lines, stripping a trailing '\r' and skipping empty lines.
std::vector<Line> split_lines(std::string_view text);

std::vector<std::string_view> split_fields(std::string_view line);

std::string_view trim(std::string_view s);

// Strict parsers: the whole field must be consumed.
bool parse_int(std::string_view field, std::int64_t& out);
bool parse_real(std::string_view field, double& out);

// Shortest representation that parses back to the same double.
std::string format_real(double value);

}  // namespace frecency::csv
