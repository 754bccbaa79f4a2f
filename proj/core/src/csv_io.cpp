#include "anthill/csv_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "anthill/format.hpp"

namespace anthill {

void write_pattern_csv(std::ostream& os, const RadiationPattern& pattern) {
  os << kPatternCsvHeader << '\n';
  for (std::size_t i = 0; i < pattern.angles_deg.size(); ++i) {
    os << format_double(pattern.angles_deg[i]) << ','
       << format_double(pattern.magnitude[i]) << ','
       << format_double(pattern.db[i]) << '\n';
  }
}

std::string pattern_csv(const RadiationPattern& pattern) {
  std::ostringstream os;
  write_pattern_csv(os, pattern);
  return os.str();
}

RadiationPattern read_pattern_csv(std::istream& is) {
  auto fail = [](int line, const std::string& what) -> void {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
  };

  std::string row;
  int line = 0;
  if (!std::getline(is, row)) fail(1, "empty pattern file");
  ++line;
  if (!row.empty() && row.back() == '\r') row.pop_back();
  if (row != kPatternCsvHeader)
    fail(line, "expected header '" + std::string(kPatternCsvHeader) + "'");

  RadiationPattern p;
  while (std::getline(is, row)) {
    ++line;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row.empty()) continue;
    const auto c1 = row.find(',');
    const auto c2 = c1 == std::string::npos ? c1 : row.find(',', c1 + 1);
    if (c2 == std::string::npos || row.find(',', c2 + 1) != std::string::npos)
      fail(line, "expected exactly three comma-separated fields");
    try {
      const double theta = parse_double(row.substr(0, c1));
      const double mag = parse_double(row.substr(c1 + 1, c2 - c1 - 1));
      const double db = parse_double(row.substr(c2 + 1));
      if (!p.angles_deg.empty() && theta <= p.angles_deg.back())
        fail(line, "angles must be strictly increasing");
      p.angles_deg.push_back(theta);
      p.magnitude.push_back(mag);
      p.db.push_back(db);
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      fail(line, what);
    }
  }
  if (p.angles_deg.empty()) fail(line, "pattern file has no samples");
  p.floor_db = *std::min_element(p.db.begin(), p.db.end());
  return p;
}

}  // namespace anthill
