#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "anthill/packing.hpp"
#include "anthill/rng.hpp"

using namespace anthill;

TEST_CASE("next fit walks items in order and never looks back") {
  const PackingInstance inst{{0.4, 0.7, 0.3, 0.9}, 1.0};
  const auto sol = next_fit(inst);
  REQUIRE(sol.bins.size() == 3);
  CHECK(sol.used_bins == 3);
  CHECK(sol.bins[0] == std::vector<int>{0});
  CHECK(sol.bins[1] == std::vector<int>{1, 2});
  CHECK(sol.bins[2] == std::vector<int>{3});
  CHECK(sol.bin_loads[0] == doctest::Approx(0.4));
  CHECK(sol.bin_loads[1] == doctest::Approx(1.0));
  CHECK(sol.bin_loads[2] == doctest::Approx(0.9));
  CHECK(validate(inst, sol).ok);
}

TEST_CASE("exact fills survive floating point accumulation") {
  // 0.34 + 0.33 + 0.33 sums a hair over 1.0 in binary; the capacity slack
  // keeps the intended single-bin packing.
  const PackingInstance inst{{0.34, 0.33, 0.33}, 1.0};
  const auto sol = next_fit(inst);
  CHECK(sol.used_bins == 1);
  CHECK(validate(inst, sol).ok);
}

TEST_CASE("zero-size items ride along in the current bin") {
  const auto sol = next_fit({{0.0, 0.0, 0.0}, 1.0});
  REQUIRE(sol.used_bins == 1);
  CHECK(sol.bins[0] == std::vector<int>{0, 1, 2});

  const auto mixed = next_fit({{0.5, 0.0, 0.6}, 1.0});
  REQUIRE(mixed.used_bins == 2);
  CHECK(mixed.bins[0] == std::vector<int>{0, 1});
  CHECK(mixed.bins[1] == std::vector<int>{2});
}

TEST_CASE("oversized items are rejected up front") {
  CHECK_THROWS_AS(next_fit({{1.5}, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(next_fit({{0.5}, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(optimal_packing({{1.5}, 1.0}), std::invalid_argument);
}

TEST_CASE("strict instance validation rejects non-positive sizes") {
  CHECK_THROWS_AS((PackingInstance{{0.5, 0.0}, 1.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_AS((PackingInstance{{-0.1}, 1.0}).validate(),
                  std::invalid_argument);
  CHECK_NOTHROW((PackingInstance{{0.5, 0.5}, 1.0}).validate());
}

TEST_CASE("optimal packing returns the lexicographically first optimum") {
  const PackingInstance inst{{0.4, 0.7, 0.3, 0.9}, 1.0};
  const auto sol = optimal_packing(inst);
  CHECK(sol.used_bins == 3);
  CHECK(sol.assignment(4) == std::vector<int>{0, 1, 0, 2});
  CHECK(validate(inst, sol).ok);
}

TEST_CASE("next fit can use up to twice the optimal bin count") {
  const PackingInstance inst{{0.5, 0.9, 0.5}, 1.0};
  CHECK(next_fit(inst).used_bins == 3);
  CHECK(optimal_packing(inst).used_bins == 2);
}

TEST_CASE("the exhaustive solver draws the line at 12 items") {
  PackingInstance inst{std::vector<double>(13, 0.1), 1.0};
  CHECK_THROWS_AS(optimal_packing(inst), std::invalid_argument);
  inst.sizes.resize(12);
  CHECK_NOTHROW(optimal_packing(inst));
}

TEST_CASE("assignment flattens bins and marks missing items") {
  PackingSolution sol;
  sol.bins = {{0, 2}, {1}};
  sol.used_bins = 2;
  sol.bin_loads = {0.7, 0.5};
  CHECK(sol.assignment(4) == std::vector<int>{0, 1, 0, -1});
}

TEST_CASE("solution validation pinpoints each kind of defect") {
  const PackingInstance inst{{0.5, 0.5, 0.5}, 1.0};

  PackingSolution good;
  good.bins = {{0, 1}, {2}};
  good.used_bins = 2;
  good.bin_loads = {1.0, 0.5};
  CHECK(validate(inst, good).ok);

  auto doubled = good;
  doubled.bins[1] = {1, 2};
  doubled.bin_loads[1] = 1.0;
  auto r = validate(inst, doubled);
  CHECK(!r.ok);
  REQUIRE(!r.violations.empty());
  CHECK(r.violations[0].find("multiply assigned") != std::string::npos);

  PackingSolution missing;
  missing.bins = {{0, 1}};
  missing.used_bins = 1;
  missing.bin_loads = {1.0};
  r = validate(inst, missing);
  CHECK(!r.ok);
  CHECK(r.violations[0].find("unassigned") != std::string::npos);

  PackingSolution heavy;
  heavy.bins = {{0, 1, 2}};
  heavy.used_bins = 1;
  heavy.bin_loads = {1.5};
  r = validate(inst, heavy);
  CHECK(!r.ok);
  bool flagged = false;
  for (const auto& v : r.violations)
    if (v.find("capacity exceeded") != std::string::npos) flagged = true;
  CHECK(flagged);

  auto wrong_count = good;
  wrong_count.used_bins = 5;
  r = validate(inst, wrong_count);
  CHECK(!r.ok);

  auto wrong_load = good;
  wrong_load.bin_loads[0] = 0.25;
  r = validate(inst, wrong_load);
  CHECK(!r.ok);

  auto alien = good;
  alien.bins[1] = {7};
  r = validate(inst, alien);
  CHECK(!r.ok);
  bool unknown = false;
  for (const auto& v : r.violations)
    if (v.find("unknown item") != std::string::npos) unknown = true;
  CHECK(unknown);

  auto hollow = good;
  hollow.bins.push_back({});
  hollow.bin_loads.push_back(0.0);
  hollow.used_bins = 3;
  r = validate(inst, hollow);
  CHECK(!r.ok);
}

TEST_CASE("random instances: heuristic stays within twice the optimum") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform01() * 8.0);
    PackingInstance inst;
    inst.capacity = 1.0;
    for (int i = 0; i < n; ++i)
      inst.sizes.push_back(rng.uniform(0.05, 1.0));
    inst.validate();

    const auto nf = next_fit(inst);
    CHECK(validate(inst, nf).ok);
    const auto opt = optimal_packing(inst);
    CHECK(validate(inst, opt).ok);
    CHECK(opt.used_bins <= nf.used_bins);
    CHECK(nf.used_bins <= 2 * opt.used_bins);
  }
}
