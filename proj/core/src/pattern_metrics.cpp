#include "anthill/pattern_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "anthill/format.hpp"

namespace anthill {

namespace {

constexpr double kSplitDepthDb = 3.0;
constexpr double kGratingThresholdDb = -1.0;

struct ParabolaVertex {
  double x;
  double y;
  bool valid;
};

// Vertex of the parabola through three points; tolerates uneven x spacing
// (the pinned grid endpoint makes the last interval shorter).
ParabolaVertex parabola_vertex(double x0, double y0, double x1, double y1,
                               double x2, double y2) {
  const double d01 = x1 - x0;
  const double d12 = x1 - x2;
  const double num = d01 * d01 * (y1 - y2) - d12 * d12 * (y1 - y0);
  const double den = d01 * (y1 - y2) - d12 * (y1 - y0);
  if (den == 0.0 || !std::isfinite(num / den)) return {x1, y1, false};
  double xv = x1 - 0.5 * num / den;
  xv = std::clamp(xv, x0, x2);
  // Evaluate the fitted parabola at the vertex (Lagrange form).
  const double l0 = (xv - x1) * (xv - x2) / ((x0 - x1) * (x0 - x2));
  const double l1 = (xv - x0) * (xv - x2) / ((x1 - x0) * (x1 - x2));
  const double l2 = (xv - x0) * (xv - x1) / ((x2 - x0) * (x2 - x1));
  return {xv, y0 * l0 + y1 * l1 + y2 * l2, true};
}

void check_pattern(const RadiationPattern& p, double floor_db) {
  const std::size_t n = p.db.size();
  if (n < 3)
    throw std::invalid_argument("pattern needs at least 3 samples for lobes");
  if (p.angles_deg.size() != n || p.magnitude.size() != n)
    throw std::invalid_argument("pattern arrays have mismatched lengths");
  if (!std::isfinite(floor_db) || floor_db >= 0.0)
    throw std::invalid_argument("dB floor must be finite and negative");
}

// Index of the global dB maximum; among equal maxima prefer the angle
// nearest 90 degrees, then the smaller angle. Keeps the main-lobe choice
// physical when grating lobes tie the broadside peak exactly.
std::size_t global_peak_index(const RadiationPattern& p) {
  std::size_t best = 0;
  double best_db = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.db.size(); ++i) {
    if (p.db[i] > best_db) {
      best_db = p.db[i];
      best = i;
    } else if (p.db[i] == best_db) {
      const double cur = std::abs(p.angles_deg[i] - 90.0);
      const double old = std::abs(p.angles_deg[best] - 90.0);
      if (cur < old) best = i;
    }
  }
  return best;
}

struct PeakGroup {
  std::vector<std::size_t> reps;  // plateau representatives, ascending
  double peak_db;
};

// Deepest sample strictly between two group representatives. An empty gap
// (adjacent plateaus) reports the left peak itself, which always fails the
// separation test and forces a merge.
std::pair<std::size_t, double> valley_between(const std::vector<double>& db,
                                              const PeakGroup& a,
                                              const PeakGroup& b) {
  const std::size_t lo = a.reps.back() + 1;
  const std::size_t hi = b.reps.front();  // exclusive
  if (lo >= hi) return {a.reps.back(), db[a.reps.back()]};
  std::size_t arg = lo;
  for (std::size_t i = lo + 1; i < hi; ++i)
    if (db[i] < db[arg]) arg = i;
  return {arg, db[arg]};
}

}  // namespace

std::vector<Lobe> find_lobes(const RadiationPattern& pattern,
                             double floor_db) {
  check_pattern(pattern, floor_db);
  const auto& db = pattern.db;
  const auto& th = pattern.angles_deg;
  const std::size_t n = db.size();

  std::vector<Lobe> lobes;
  std::size_t i = 0;
  while (i < n) {
    if (!(db[i] > floor_db)) {
      ++i;
      continue;
    }
    std::size_t l = i, r = i;
    while (r + 1 < n && db[r + 1] > floor_db) ++r;
    i = r + 1;

    // Plateau-collapsed local maxima inside the run; run edges count with
    // only their inward neighbor.
    std::vector<std::size_t> maxima;
    std::size_t k = l;
    while (k <= r) {
      std::size_t m = k;
      while (m + 1 <= r && db[m + 1] == db[k]) ++m;
      const bool left_ok = (k == l) || (db[k] > db[k - 1]);
      const bool right_ok = (m == r) || (db[m] > db[m + 1]);
      if (left_ok && right_ok) maxima.push_back(k);
      k = m + 1;
    }
    if (maxima.empty()) {
      std::size_t arg = l;
      for (std::size_t j = l + 1; j <= r; ++j)
        if (db[j] > db[arg]) arg = j;
      maxima.push_back(arg);
    }

    std::vector<PeakGroup> groups;
    groups.reserve(maxima.size());
    for (std::size_t p : maxima) groups.push_back({{p}, db[p]});

    // Merge neighbors whose valley is not at least 3 dB below both peaks,
    // shallowest separation first, until every remaining split is genuine.
    while (groups.size() > 1) {
      double best_depth = std::numeric_limits<double>::infinity();
      std::size_t best_gi = groups.size();
      for (std::size_t gi = 0; gi + 1 < groups.size(); ++gi) {
        const auto [vi, vdb] = valley_between(db, groups[gi], groups[gi + 1]);
        const double p1 = groups[gi].peak_db;
        const double p2 = groups[gi + 1].peak_db;
        if (!(vdb <= p1 - kSplitDepthDb && vdb <= p2 - kSplitDepthDb)) {
          const double depth = std::min(p1, p2) - vdb;
          if (depth < best_depth) {
            best_depth = depth;
            best_gi = gi;
          }
        }
      }
      if (best_gi == groups.size()) break;
      auto& g = groups[best_gi];
      auto& h = groups[best_gi + 1];
      g.reps.insert(g.reps.end(), h.reps.begin(), h.reps.end());
      g.peak_db = std::max(g.peak_db, h.peak_db);
      groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(best_gi) + 1);
    }

    std::vector<std::size_t> bounds;
    bounds.push_back(l);
    for (std::size_t gi = 0; gi + 1 < groups.size(); ++gi)
      bounds.push_back(valley_between(db, groups[gi], groups[gi + 1]).first);
    bounds.push_back(r);

    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      std::size_t peak = groups[gi].reps.front();
      for (std::size_t p : groups[gi].reps)
        if (db[p] > db[peak]) peak = p;

      Lobe lobe;
      lobe.peak_index = peak;
      lobe.left_index = bounds[gi];
      lobe.right_index = bounds[gi + 1];
      lobe.left_deg = th[lobe.left_index];
      lobe.right_deg = th[lobe.right_index];
      lobe.peak_angle_deg = th[peak];
      lobe.peak_db = db[peak];
      if (peak > 0 && peak + 1 < n && db[peak] > db[peak - 1] &&
          db[peak] > db[peak + 1]) {
        const auto v = parabola_vertex(th[peak - 1], db[peak - 1], th[peak],
                                       db[peak], th[peak + 1], db[peak + 1]);
        if (v.valid) {
          lobe.peak_angle_deg = v.x;
          lobe.peak_db = std::max(v.y, db[peak]);
        }
      }
      lobes.push_back(lobe);
    }
  }

  if (lobes.empty()) return lobes;  // cannot happen after normalization

  const std::size_t gmax = global_peak_index(pattern);
  std::size_t main_i = 0;
  for (std::size_t li = 0; li < lobes.size(); ++li) {
    if (lobes[li].left_index <= gmax && gmax <= lobes[li].right_index) {
      main_i = li;
      break;
    }
  }
  for (std::size_t li = 0; li < lobes.size(); ++li) {
    if (li == main_i)
      lobes[li].kind = LobeKind::main;
    else
      lobes[li].kind = lobes[li].peak_db >= kGratingThresholdDb
                           ? LobeKind::grating
                           : LobeKind::side;
  }
  return lobes;
}

std::vector<Lobe> find_lobes(const RadiationPattern& pattern) {
  return find_lobes(pattern, pattern.floor_db);
}

int count_side_lobes(const RadiationPattern& pattern, double floor_db) {
  const auto lobes = find_lobes(pattern, floor_db);
  int count = 0;
  for (const auto& l : lobes)
    if (l.kind != LobeKind::main) ++count;
  return count;
}

std::optional<double> peak_sll(const RadiationPattern& pattern,
                               double floor_db) {
  const auto lobes = find_lobes(pattern, floor_db);
  std::optional<double> best;
  for (const auto& l : lobes) {
    if (l.kind == LobeKind::main) continue;
    if (!best || l.peak_db > *best) best = l.peak_db;
  }
  return best;
}

namespace {

// First interior magnitude minimum walking outward from `from`;
// direction -1 walks left, +1 walks right. Returns the refined angle, or
// nothing if the walk hits the grid edge first.
std::optional<double> first_null_outward(const RadiationPattern& p,
                                         std::size_t from, int direction) {
  const auto& mag = p.magnitude;
  const auto& th = p.angles_deg;
  const std::size_t n = mag.size();
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(from) + direction;
  for (; i > 0 && i + 1 < static_cast<std::ptrdiff_t>(n); i += direction) {
    const auto u = static_cast<std::size_t>(i);
    const bool strict_dip = mag[u] < mag[u - 1] || mag[u] < mag[u + 1];
    if (strict_dip && mag[u] <= mag[u - 1] && mag[u] <= mag[u + 1]) {
      // Refine on squared magnitude; exact when the dip is a true null.
      const auto v = parabola_vertex(th[u - 1], mag[u - 1] * mag[u - 1], th[u],
                                     mag[u] * mag[u], th[u + 1],
                                     mag[u + 1] * mag[u + 1]);
      return v.valid ? v.x : th[u];
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> fnbw(const RadiationPattern& pattern) {
  if (pattern.db.size() < 3)
    throw std::invalid_argument("pattern needs at least 3 samples for fnbw");
  const std::size_t peak = global_peak_index(pattern);
  const auto left = first_null_outward(pattern, peak, -1);
  const auto right = first_null_outward(pattern, peak, +1);
  if (!left || !right) return std::nullopt;
  return *right - *left;
}

LobeReport analyze(const RadiationPattern& pattern, double floor_db) {
  LobeReport rep;
  rep.lobes = find_lobes(pattern, floor_db);
  for (std::size_t i = 0; i < rep.lobes.size(); ++i) {
    const auto& l = rep.lobes[i];
    if (l.kind == LobeKind::main) {
      rep.main_index = i;
      continue;
    }
    ++rep.side_lobe_count;
    if (l.kind == LobeKind::grating) ++rep.grating_count;
    if (!rep.peak_sll_db || l.peak_db > *rep.peak_sll_db)
      rep.peak_sll_db = l.peak_db;
  }
  rep.fnbw_deg = fnbw(pattern);
  return rep;
}

std::string format_metrics_record(const LobeReport& report,
                                  std::optional<int> elements,
                                  std::optional<double> spacing) {
  std::string out;
  if (elements) out += "elements=" + std::to_string(*elements) + "\n";
  if (spacing) out += "spacing=" + format_double(*spacing) + "\n";
  out += "side_lobe_count=" + std::to_string(report.side_lobe_count) + "\n";
  out += "grating_count=" + std::to_string(report.grating_count) + "\n";
  out += "peak_sll_db=" +
         (report.peak_sll_db ? format_double(*report.peak_sll_db) : "") + "\n";
  out += "fnbw_deg=" +
         (report.fnbw_deg ? format_double(*report.fnbw_deg) : "") + "\n";
  return out;
}

}  // namespace anthill
