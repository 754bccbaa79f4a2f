#pragma once

#include <string>
#include <string_view>

namespace anthill {

// Shortest decimal string that round-trips to the same double. Used by every
// text surface (CSV, trace logs, flat records) so output is byte-stable.
std::string format_double(double value);

// Strict parse of a full string as a double. Throws std::invalid_argument on
// trailing garbage, empty input, or out-of-range values.
double parse_double(std::string_view text);

// Strict parse of a full string as a long long.
long long parse_int(std::string_view text);

}  // namespace anthill
