#pragma once

// Rational resonance: a fixed-factor series with log10(F) = L/T (reduced)
// revisits the same T significands forever and cannot be Benford.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "benlab/series.hpp"

namespace benlab {

struct RationalApprox {
  long long L = 0;
  long long T = 0;
  double error = 0.0;  ///< |log10 F - L/T|
  bool reduced = true;

  double value() const { return static_cast<double>(L) / static_cast<double>(T); }
};

struct DisruptivePair {
  long long T = 0;
  long long L = 0;
  double rate_percent = 0.0;
  double deviation = 0.0;  ///< 500/T heuristic
  bool boundary = false;   ///< L == T, the 900% edge of the percent axis
};

/// P such that log10(1 + P/100) = L/T.
inline double rate_from_pair(long long L, long long T) {
  if (L < 1 || T < 1) throw std::domain_error("rate_from_pair: L and T must be >= 1");
  return 100.0 * (std::pow(10.0, static_cast<double>(L) / static_cast<double>(T)) - 1.0);
}

/// 500/T. Ranking heuristic for how strongly a resonance disrupts; not an SSD
/// prediction.
inline double theoretical_deviation(long long T) {
  if (T < 1) throw std::domain_error("theoretical_deviation: T must be >= 1");
  return 500.0 / static_cast<double>(T);
}

/// Closest reduced L/T to logF with T <= tmax, if within tolerance. Exhaustive
/// over T; ties go to the smaller T.
inline std::optional<RationalApprox> detect_rational(double logF, long long tmax,
                                                     double tolerance) {
  if (!(logF > 0.0) || logF > 1.0) {
    throw std::domain_error("detect_rational: log10(F) must lie in (0, 1]");
  }
  if (tmax < 1) throw std::domain_error("detect_rational: tmax must be >= 1");
  if (!(tolerance >= 0.0)) {
    throw std::domain_error("detect_rational: tolerance must be non-negative");
  }
  std::optional<RationalApprox> best;
  for (long long T = 1; T <= tmax; ++T) {
    const auto L = std::max<long long>(
        1, std::llround(logF * static_cast<double>(T)));
    // A non-reduced L/T equals a reduced fraction already seen at smaller T.
    if (std::gcd(L, T) != 1) continue;
    const double err =
        std::fabs(logF - static_cast<double>(L) / static_cast<double>(T));
    if (!best || err < best->error) best = RationalApprox{L, T, err, true};
  }
  if (best && best->error <= tolerance) return best;
  return std::nullopt;
}

namespace detail {

inline long long max_numerator(double ptop, long long T) {
  // L <= T*log10(1 + Ptop/100); the slack keeps exact products like T*1.0.
  const double cap = static_cast<double>(T) * std::log10(1.0 + ptop / 100.0);
  return static_cast<long long>(std::floor(cap + 1e-12));
}

}  // namespace detail

/// Number of {T, L} pairs before discarding non-reduced forms.
inline std::size_t count_raw_pairs(double ptop, long long tmax) {
  if (!(ptop > 0.0)) throw std::domain_error("count_raw_pairs: ptop must be positive");
  std::size_t n = 0;
  for (long long T = 1; T <= tmax; ++T) {
    n += static_cast<std::size_t>(std::max<long long>(0, detail::max_numerator(ptop, T)));
  }
  return n;
}

/// All reduced disruptive pairs on (0, Ptop], T <= tmax, sorted by rate.
inline std::vector<DisruptivePair> enumerate_pairs(double ptop, long long tmax) {
  if (!(ptop > 0.0)) throw std::domain_error("enumerate_pairs: ptop must be positive");
  if (tmax < 1) throw std::domain_error("enumerate_pairs: tmax must be >= 1");
  std::vector<DisruptivePair> pairs;
  for (long long T = 1; T <= tmax; ++T) {
    const long long lmax = detail::max_numerator(ptop, T);
    for (long long L = 1; L <= lmax; ++L) {
      if (std::gcd(L, T) != 1) continue;
      pairs.push_back({T, L, rate_from_pair(L, T), theoretical_deviation(T), L == T});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    // Compare L/T exactly rather than through the rounded rates.
    return a.L * b.T < b.L * a.T;
  });
  return pairs;
}

/// The T significands a rebellious series cycles through, starting at base.
inline std::vector<double> cycle_structure(long long L, long long T, double base) {
  if (L < 1 || T < 1) throw std::domain_error("cycle_structure: L and T must be >= 1");
  if (std::gcd(L, T) != 1) {
    throw std::domain_error("cycle_structure: L/T must be in reduced form");
  }
  if (!(base > 0.0)) throw std::domain_error("cycle_structure: base must be positive");
  const double lb = std::log10(base);
  const double mb = lb - std::floor(lb);
  std::vector<double> sig(static_cast<std::size_t>(T));
  for (long long n = 0; n < T; ++n) {
    double m = mb + static_cast<double>((n * L) % T) / static_cast<double>(T);
    if (m >= 1.0) m -= 1.0;
    sig[static_cast<std::size_t>(n)] = std::pow(10.0, m);
  }
  return sig;
}

/// Fixed-factor series at log10 F = L/T evaluated on the exact rational
/// lattice: element n is base * 10^(nL/T) with nL/T split into whole decades
/// and a remainder r/T before any rounding, so each cycle repeats exactly.
inline LogSeries rational_series(long long L, long long T, double base,
                                 std::size_t count) {
  if (L < 1 || T < 1) throw std::domain_error("rational_series: L and T must be >= 1");
  if (!(base > 0.0)) throw std::domain_error("rational_series: base must be positive");
  const double lb = std::log10(base);
  LogSeries s;
  s.meta = "rational L=" + std::to_string(L) + " T=" + std::to_string(T) +
           " base=" + std::to_string(base);
  s.logs.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<long long>(i);
    const long long whole = (n * L) / T;
    const long long rem = (n * L) % T;
    s.logs[i] = (lb + static_cast<double>(rem) / static_cast<double>(T)) +
                static_cast<double>(whole);
  }
  return s;
}

}  // namespace benlab
