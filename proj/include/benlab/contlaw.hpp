#pragma once

// Continuous growth X(t) = B * F^t. The time spent with leading digit d over
// one decade is log(1 + 1/d) / log(10) whatever F is.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "benlab/digits.hpp"

namespace benlab {

/// Periods until B * F^t reaches quantity * B.
inline double crossing_time(double factor, double quantity) {
  if (!(factor > 1.0)) throw std::domain_error("crossing_time: factor must exceed 1");
  if (!(quantity >= 1.0)) throw std::domain_error("crossing_time: quantity must be >= 1");
  return std::log(quantity) / std::log(factor);
}

struct CrossingRow {
  double quantity = 0.0;
  double time = 0.0;
};

struct CrossingTable {
  double factor = 0.0;
  double base = 1.0;
  std::vector<CrossingRow> rows;  ///< quantities B*1 .. B*10
};

/// Crossing times of B*q, q = 1..10, measured from the moment X = B.
inline CrossingTable crossing_table(double factor, double base = 1.0) {
  if (!(base > 0.0)) throw std::domain_error("crossing_table: base must be positive");
  CrossingTable t{factor, base, {}};
  for (int q = 1; q <= 10; ++q) {
    t.rows.push_back({base * q, crossing_time(factor, q)});
  }
  return t;
}

struct DwellInterval {
  int digit = 0;
  double periods = 0.0;
};

/// Time spent with leading digit d during one decade (B, 10B).
inline std::vector<DwellInterval> dwell_intervals(double factor) {
  std::vector<DwellInterval> out;
  for (int d = 1; d <= kDigitCount; ++d) {
    out.push_back({d, crossing_time(factor, d + 1) - crossing_time(factor, d)});
  }
  return out;
}

struct DwellProportions {
  double factor = 0.0;
  std::array<double, kDigitCount> proportions{};
};

/// Dwell share of each digit: log_F((d+1)/d) / log_F(10).
inline DwellProportions dwell_proportions(double factor) {
  if (!(factor > 1.0)) throw std::domain_error("dwell_proportions: factor must exceed 1");
  DwellProportions p;
  p.factor = factor;
  const double decade = crossing_time(factor, 10.0);
  const auto iv = dwell_intervals(factor);
  for (int i = 0; i < kDigitCount; ++i) p.proportions[i] = iv[i].periods / decade;
  return p;
}

/// Growth rate per sub-period when a period is split into `subdivisions`
/// equal compounding steps, e.g. yearly growth quoted per second.
inline double subperiod_rate_percent(double percent, double subdivisions) {
  if (!(percent > -100.0)) throw std::domain_error("subperiod_rate_percent: percent must exceed -100");
  if (!(subdivisions > 0.0)) throw std::domain_error("subperiod_rate_percent: subdivisions must be positive");
  return 100.0 * std::expm1(std::log1p(percent / 100.0) / subdivisions);
}

}  // namespace benlab
