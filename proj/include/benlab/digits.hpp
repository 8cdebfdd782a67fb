#pragma once

// First-significant-digit machinery: digit extraction (linear and log
// domain), mantissa/characteristic decomposition, the Benford reference
// and the SSD conformance metric.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>

namespace benlab {

inline constexpr int kDigitCount = 9;

using DigitCounts = std::array<std::uint64_t, kDigitCount>;
using DigitPercents = std::array<double, kDigitCount>;

/// x = 10^characteristic * 10^mantissa, mantissa in [0, 1).
struct MantissaDecomposition {
  long long characteristic = 0;
  double mantissa = 0.0;
};

/// probs[d-1] = log10(1 + 1/d).
struct BenfordReference {
  std::array<double, kDigitCount> probs{};

  double probability(int digit) const { return probs.at(digit - 1); }
  double percent(int digit) const { return 100.0 * probability(digit); }
};

inline BenfordReference benford_expected() {
  BenfordReference ref;
  for (int d = 1; d <= kDigitCount; ++d) {
    ref.probs[d - 1] = std::log10(1.0 + 1.0 / d);
  }
  return ref;
}

namespace detail {

// log10(d) for d = 1..10, the mantissa thresholds of each leading digit.
inline const std::array<double, 11>& digit_thresholds() {
  static const std::array<double, 11> t = [] {
    std::array<double, 11> v{};
    for (int d = 1; d <= 10; ++d) v[d] = std::log10(static_cast<double>(d));
    return v;
  }();
  return t;
}

inline double ulp(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity()) - x;
}

}  // namespace detail

/// Leading digit of a mantissa in [0, 1). Values within `slack` below a digit
/// boundary are read as the upper digit; a mantissa within `slack` of 1 wraps
/// to digit 1.
inline int digit_from_mantissa(double mantissa, double slack = 0.0) {
  const auto& t = detail::digit_thresholds();
  if (mantissa >= 1.0 - slack) return 1;
  int d = 1;
  while (d < kDigitCount && mantissa >= t[d + 1] - slack) ++d;
  return d;
}

/// Leading digit of 10^logx. The log value only pins the mantissa to within a
/// couple of ulps of |logx|, so exact powers d*10^k resolve to d.
inline int first_digit_from_log(double logx) {
  if (!std::isfinite(logx)) {
    throw std::domain_error("first_digit_from_log: non-finite log value");
  }
  const double mantissa = logx - std::floor(logx);
  const double slack = 2.0 * detail::ulp(std::max(1.0, std::fabs(logx)));
  return digit_from_mantissa(mantissa, slack);
}

/// Leading digit of |x|, read from the exact decimal expansion.
inline int first_digit(double x) {
  if (x == 0.0 || !std::isfinite(x)) {
    throw std::domain_error("first_digit: no leading digit");
  }
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(),
                                 std::fabs(x), std::chars_format::scientific, 40);
  if (res.ec != std::errc{}) {
    throw std::domain_error("first_digit: formatting failed");
  }
  return buf[0] - '0';
}

inline MantissaDecomposition mantissa_decompose(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("mantissa_decompose: requires finite x > 0");
  }
  const double lg = std::log10(x);
  const double ch = std::floor(lg);
  return {static_cast<long long>(ch), lg - ch};
}

/// Sum of squared deviations from Benford, percent units on both sides and
/// full-precision targets. The input is not required to sum to 100.
inline double ssd(std::span<const double, kDigitCount> observed_percent) {
  const auto ref = benford_expected();
  double acc = 0.0;
  for (int i = 0; i < kDigitCount; ++i) {
    const double dev = observed_percent[i] - 100.0 * ref.probs[i];
    acc += dev * dev;
  }
  return acc;
}

struct DigitDistribution {
  DigitCounts counts{};
  std::uint64_t total = 0;
  std::array<double, kDigitCount> proportions{};
  double ssd = 0.0;

  std::uint64_t count(int digit) const { return counts.at(digit - 1); }
  double proportion(int digit) const { return proportions.at(digit - 1); }
  double percent(int digit) const { return 100.0 * proportion(digit); }

  DigitPercents percents() const {
    DigitPercents p{};
    for (int i = 0; i < kDigitCount; ++i) p[i] = 100.0 * proportions[i];
    return p;
  }

  static DigitDistribution from_counts(const DigitCounts& counts) {
    DigitDistribution dd;
    dd.counts = counts;
    dd.total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (dd.total == 0) {
      throw std::domain_error("digit distribution of an empty sample");
    }
    for (int i = 0; i < kDigitCount; ++i) {
      dd.proportions[i] =
          static_cast<double>(counts[i]) / static_cast<double>(dd.total);
    }
    const auto pct = dd.percents();
    dd.ssd = benlab::ssd(pct);
    return dd;
  }
};

/// Streaming tally; lets long series be counted without being stored.
class DigitCounter {
 public:
  void add_digit(int digit) { ++counts_.at(digit - 1); }
  void add_log(double logx) { add_digit(first_digit_from_log(logx)); }
  void add_value(double x) { add_digit(first_digit(x)); }

  void merge(const DigitCounter& other) {
    for (int i = 0; i < kDigitCount; ++i) counts_[i] += other.counts_[i];
  }

  const DigitCounts& counts() const { return counts_; }
  std::uint64_t total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
  }
  DigitDistribution distribution() const {
    return DigitDistribution::from_counts(counts_);
  }

 private:
  DigitCounts counts_{};
};

inline DigitDistribution digit_distribution(std::span<const double> logs) {
  if (logs.empty()) {
    throw std::domain_error("digit_distribution: empty series");
  }
  DigitCounter counter;
  for (double lg : logs) counter.add_log(lg);
  return counter.distribution();
}

}  // namespace benlab
