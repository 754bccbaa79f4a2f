#include "anthill/format.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace anthill {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec == std::errc::result_out_of_range)
    throw std::invalid_argument("number out of range: '" + std::string(text) + "'");
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  return value;
}

long long parse_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  long long value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace anthill
