#pragma once

// Histogramming a series over a linear range and fitting the reciprocal
// density k/x by least squares.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace benlab {

struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t bin_count = 0;
  std::vector<double> edges;
  std::vector<double> midpoints;
  std::vector<std::uint64_t> counts;
  std::uint64_t excluded = 0;  ///< samples outside [lo, hi]

  double bin_width() const { return (hi - lo) / static_cast<double>(bin_count); }
};

/// Bins 10^log for each log value. Bins are [edge_i, edge_{i+1}) except the
/// last, which also takes x == hi.
inline Histogram histogram(std::span<const double> logs, double lo, double hi,
                           std::size_t bins) {
  if (!(lo < hi)) throw std::domain_error("histogram: lo must be below hi");
  if (bins < 1) throw std::domain_error("histogram: need at least one bin");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.bin_count = bins;
  const double width = h.bin_width();
  h.edges.resize(bins + 1);
  h.midpoints.resize(bins);
  h.counts.assign(bins, 0);
  for (std::size_t i = 0; i <= bins; ++i) {
    h.edges[i] = lo + static_cast<double>(i) * width;
  }
  h.edges[bins] = hi;
  for (std::size_t i = 0; i < bins; ++i) {
    h.midpoints[i] = lo + (static_cast<double>(i) + 0.5) * width;
  }
  for (double lg : logs) {
    const double x = std::pow(10.0, lg);
    if (!(x >= lo && x <= hi)) {
      ++h.excluded;
      continue;
    }
    auto idx = static_cast<std::size_t>(std::floor((x - lo) / width));
    if (idx >= bins) idx = bins - 1;
    // Guard the division against landing one bin off at an edge.
    while (idx > 0 && x < h.edges[idx]) --idx;
    while (idx + 1 < bins && x >= h.edges[idx + 1]) ++idx;
    ++h.counts[idx];
  }
  return h;
}

struct KxFit {
  double k = 0.0;
  double sse = 0.0;
  double numerator = 0.0;    ///< sum count_i / x_i
  double denominator = 0.0;  ///< sum 1 / x_i^2
};

/// Sum of squared errors of k/x against the bin counts.
inline double kx_sse(const Histogram& h, double k) {
  double sse = 0.0;
  for (std::size_t i = 0; i < h.bin_count; ++i) {
    const double r = k / h.midpoints[i] - static_cast<double>(h.counts[i]);
    sse += r * r;
  }
  return sse;
}

/// Setting d(SSE)/dk = 0 gives k = sum(c_i/x_i) / sum(1/x_i^2).
inline KxFit fit_k(const Histogram& h) {
  KxFit f;
  std::uint64_t nonzero = 0;
  for (std::size_t i = 0; i < h.bin_count; ++i) {
    const double x = h.midpoints[i];
    if (!(x > 0.0)) throw std::domain_error("fit_k: midpoints must be positive");
    f.numerator += static_cast<double>(h.counts[i]) / x;
    f.denominator += 1.0 / (x * x);
    nonzero += h.counts[i];
  }
  if (nonzero == 0) throw std::domain_error("fit_k: histogram has no counts");
  f.k = f.numerator / f.denominator;
  f.sse = kx_sse(h, f.k);
  return f;
}

namespace detail {

inline std::size_t bin_near(const Histogram& h, double x) {
  const double half = 0.5 * h.bin_width();
  for (std::size_t i = 0; i < h.bin_count; ++i) {
    if (std::fabs(h.midpoints[i] - x) <= half * (1.0 + 1e-9)) return i;
  }
  throw std::domain_error("doubling_check: no bin midpoint near requested x");
}

}  // namespace detail

/// Fractional drop in count from the bin at x to the bin at ~2x; 0.5 for an
/// ideal k/x density.
inline double doubling_check(const Histogram& h, double x_low_mid, double x_high_mid) {
  if (std::fabs(x_high_mid - 2.0 * x_low_mid) > h.bin_width()) {
    throw std::domain_error("doubling_check: x_high must be about twice x_low");
  }
  const auto lo = detail::bin_near(h, x_low_mid);
  const auto hi = detail::bin_near(h, x_high_mid);
  const double c_lo = static_cast<double>(h.counts[lo]);
  if (c_lo == 0.0) throw std::domain_error("doubling_check: empty lower bin");
  return (c_lo - static_cast<double>(h.counts[hi])) / c_lo;
}

}  // namespace benlab
