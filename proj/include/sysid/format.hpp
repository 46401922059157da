#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sysid {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

/// 17-significant-digit representation (round-trip exact, fixed width-ish).
std::string format_double17(double v);

/// Parse a double; throws ValidationError on empty input or trailing garbage.
double parse_double(std::string_view s);

/// Parse a signed integer; throws ValidationError on failure.
long long parse_int(std::string_view s);

/// Parse an unsigned 64-bit integer; throws ValidationError on failure.
std::uint64_t parse_uint64(std::string_view s);

/// Split a line into whitespace-separated tokens.
std::vector<std::string_view> split_tokens(std::string_view line);

/// Split on a single-character delimiter, keeping empty fields.
std::vector<std::string_view> split_on(std::string_view line, char delim);

}  // namespace sysid
