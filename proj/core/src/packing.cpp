#include "anthill/packing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anthill/format.hpp"

namespace anthill {

namespace {

bool fits(double load, double size, double capacity) {
  return load + size <= capacity + kCapacityTolerance;
}

void check_sizes(const PackingInstance& inst, bool allow_zero) {
  if (!std::isfinite(inst.capacity) || inst.capacity <= 0.0)
    throw std::invalid_argument("bin capacity must be positive");
  for (std::size_t i = 0; i < inst.sizes.size(); ++i) {
    const double s = inst.sizes[i];
    if (!std::isfinite(s) || s < 0.0 || (!allow_zero && s == 0.0))
      throw std::invalid_argument("item " + std::to_string(i) +
                                  " has an invalid size");
    if (s > inst.capacity + kCapacityTolerance)
      throw std::invalid_argument("item " + std::to_string(i) +
                                  " exceeds the bin capacity");
  }
}

}  // namespace

void PackingInstance::validate() const { check_sizes(*this, false); }

std::vector<int> PackingSolution::assignment(std::size_t item_count) const {
  std::vector<int> out(item_count, -1);
  for (std::size_t b = 0; b < bins.size(); ++b)
    for (int item : bins[b])
      if (item >= 0 && static_cast<std::size_t>(item) < item_count &&
          out[static_cast<std::size_t>(item)] < 0)
        out[static_cast<std::size_t>(item)] = static_cast<int>(b);
  return out;
}

PackingSolution next_fit(const PackingInstance& instance) {
  check_sizes(instance, true);

  PackingSolution sol;
  for (std::size_t i = 0; i < instance.sizes.size(); ++i) {
    const double s = instance.sizes[i];
    if (sol.bins.empty() ||
        !fits(sol.bin_loads.back(), s, instance.capacity)) {
      sol.bins.emplace_back();
      sol.bin_loads.push_back(0.0);
    }
    sol.bins.back().push_back(static_cast<int>(i));
    sol.bin_loads.back() += s;
  }
  sol.used_bins = static_cast<int>(sol.bins.size());
  return sol;
}

namespace {

constexpr std::size_t kOptimalItemLimit = 12;

// Canonical (restricted-growth) enumeration: item i may reuse an open bin or
// open exactly the next new one, so every partition is visited once, in
// lexicographic order of its canonical assignment vector.
struct OptimalSearch {
  const std::vector<double>& sizes;
  double capacity;
  std::vector<double> loads;
  std::vector<int> assign;

  // Phase 1: tighten best_bins to the true minimum (strict improvements only).
  void minimize(std::size_t i, int& best_bins) {
    if (static_cast<int>(loads.size()) >= best_bins) return;
    if (i == sizes.size()) {
      best_bins = static_cast<int>(loads.size());
      return;
    }
    const double s = sizes[i];
    for (std::size_t b = 0; b < loads.size(); ++b) {
      if (!fits(loads[b], s, capacity)) continue;
      loads[b] += s;
      minimize(i + 1, best_bins);
      loads[b] -= s;
    }
    if (static_cast<int>(loads.size()) + 1 < best_bins) {
      loads.push_back(s);
      minimize(i + 1, best_bins);
      loads.pop_back();
    }
  }

  // Phase 2: first complete assignment within max_bins, in canonical order,
  // is the lexicographically smallest one using the minimum bin count.
  bool first_lex(std::size_t i, int max_bins) {
    if (i == sizes.size()) return true;
    const double s = sizes[i];
    for (std::size_t b = 0; b < loads.size(); ++b) {
      if (!fits(loads[b], s, capacity)) continue;
      loads[b] += s;
      assign[i] = static_cast<int>(b);
      if (first_lex(i + 1, max_bins)) return true;
      loads[b] -= s;
    }
    if (static_cast<int>(loads.size()) < max_bins) {
      assign[i] = static_cast<int>(loads.size());
      loads.push_back(s);
      if (first_lex(i + 1, max_bins)) return true;
      loads.pop_back();
    }
    return false;
  }
};

}  // namespace

PackingSolution optimal_packing(const PackingInstance& instance) {
  check_sizes(instance, true);
  const std::size_t n = instance.sizes.size();
  if (n > kOptimalItemLimit)
    throw std::invalid_argument(
        "optimal packing is limited to 12 items; use next_fit");

  if (n == 0) return PackingSolution{};

  int k_min = next_fit(instance).used_bins;  // valid upper bound
  OptimalSearch search{instance.sizes, instance.capacity, {},
                       std::vector<int>(n, -1)};
  search.minimize(0, k_min);

  search.loads.clear();
  const bool found = search.first_lex(0, k_min);
  if (!found)
    throw std::logic_error("packing search lost its own optimum");

  PackingSolution sol;
  sol.used_bins = k_min;
  sol.bins.assign(static_cast<std::size_t>(k_min), {});
  sol.bin_loads.assign(static_cast<std::size_t>(k_min), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto b = static_cast<std::size_t>(search.assign[i]);
    sol.bins[b].push_back(static_cast<int>(i));
    sol.bin_loads[b] += instance.sizes[i];
  }
  return sol;
}

ValidationResult validate(const PackingInstance& instance,
                          const PackingSolution& solution) {
  ValidationResult res;
  auto flag = [&res](std::string msg) {
    res.ok = false;
    res.violations.push_back(std::move(msg));
  };

  const std::size_t n = instance.sizes.size();
  std::vector<int> seen(n, 0);
  for (std::size_t b = 0; b < solution.bins.size(); ++b) {
    if (solution.bins[b].empty())
      flag("bin " + std::to_string(b) + " is empty but counted");
    double load = 0.0;
    for (int item : solution.bins[b]) {
      if (item < 0 || static_cast<std::size_t>(item) >= n) {
        flag("unknown item index " + std::to_string(item));
        continue;
      }
      ++seen[static_cast<std::size_t>(item)];
      load += instance.sizes[static_cast<std::size_t>(item)];
    }
    if (load > instance.capacity + kCapacityTolerance)
      flag("capacity exceeded in bin " + std::to_string(b) + " (load " +
           format_double(load) + ")");
    if (b < solution.bin_loads.size()) {
      if (std::abs(solution.bin_loads[b] - load) > 1e-9)
        flag("recorded load for bin " + std::to_string(b) +
             " does not match its contents");
    }
  }
  if (solution.bin_loads.size() != solution.bins.size())
    flag("bin_loads length does not match bin count");
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i] == 0) flag("item " + std::to_string(i) + " unassigned");
    if (seen[i] > 1) flag("item " + std::to_string(i) + " multiply assigned");
  }
  if (solution.used_bins != static_cast<int>(solution.bins.size()))
    flag("used_bins does not match the number of bins");
  return res;
}

}  // namespace anthill
