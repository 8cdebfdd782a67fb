#pragma once

// Growth-series generators. Every series is carried as log10 values so that
// terms far beyond double range (factorials, self-powers, fast hourly growth)
// stay exact enough to read their leading digits.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "benlab/digits.hpp"
#include "benlab/random.hpp"

namespace benlab {

/// {B, BF, BF^2, ..., BF^N}: `periods` multiplications, periods+1 elements.
struct GrowthSpec {
  double base = 1.0;
  double factor = 2.0;
  std::size_t periods = 1;

  static GrowthSpec from_percent(double base, double percent,
                                 std::size_t periods) {
    return {base, 1.0 + percent / 100.0, periods};
  }

  double percent() const { return 100.0 * (factor - 1.0); }

  void validate() const {
    if (!(base > 0.0) || !std::isfinite(base)) {
      throw std::domain_error("growth spec: base must be positive");
    }
    if (!(factor > 1.0) || !std::isfinite(factor)) {
      throw std::domain_error("growth spec: factor must exceed 1");
    }
    if (periods < 1) {
      throw std::domain_error("growth spec: periods must be at least 1");
    }
  }
};

struct RandomGrowthSpec {
  double base = 1.0;
  double factor_low = 1.1;
  double factor_high = 1.2;
  std::size_t periods = 1;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(base > 0.0) || !std::isfinite(base)) {
      throw std::domain_error("random growth spec: base must be positive");
    }
    if (!(factor_low > 1.0) || !(factor_high > factor_low) ||
        !std::isfinite(factor_high)) {
      throw std::domain_error(
          "random growth spec: need 1 < factor_low < factor_high");
    }
    if (periods < 1) {
      throw std::domain_error("random growth spec: periods must be at least 1");
    }
  }
};

/// Ordered log10 values of a series plus a description of its origin.
struct LogSeries {
  std::vector<double> logs;
  std::string meta;

  std::size_t size() const { return logs.size(); }
  bool empty() const { return logs.empty(); }
  double operator[](std::size_t i) const { return logs[i]; }
  auto begin() const { return logs.begin(); }
  auto end() const { return logs.end(); }
  operator std::span<const double>() const { return logs; }

  /// 10^mantissa, in [1, 10).
  double significand(std::size_t i) const {
    const double lg = logs.at(i);
    return std::pow(10.0, lg - std::floor(lg));
  }
  /// Linear value; overflows to inf for terms beyond double range.
  double value(std::size_t i) const { return std::pow(10.0, logs.at(i)); }
  int first_digit(std::size_t i) const {
    return first_digit_from_log(logs.at(i));
  }
};

inline LogSeries gen_fixed(const GrowthSpec& spec) {
  spec.validate();
  const double lb = std::log10(spec.base);
  const double lf = std::log10(spec.factor);
  LogSeries s;
  s.meta = "fixed base=" + std::to_string(spec.base) +
           " factor=" + std::to_string(spec.factor) +
           " periods=" + std::to_string(spec.periods);
  s.logs.resize(spec.periods + 1);
  for (std::size_t n = 0; n <= spec.periods; ++n) {
    s.logs[n] = lb + static_cast<double>(n) * lf;
  }
  return s;
}

/// Factors drawn uniformly in linear space on [low, high).
inline LogSeries gen_random(const RandomGrowthSpec& spec) {
  spec.validate();
  SplitMix64 rng(spec.seed);
  LogSeries s;
  s.meta = "random base=" + std::to_string(spec.base) +
           " low=" + std::to_string(spec.factor_low) +
           " high=" + std::to_string(spec.factor_high) +
           " periods=" + std::to_string(spec.periods) +
           " seed=" + std::to_string(spec.seed);
  s.logs.reserve(spec.periods + 1);
  double acc = std::log10(spec.base);
  s.logs.push_back(acc);
  for (std::size_t i = 0; i < spec.periods; ++i) {
    acc += std::log10(rng.uniform(spec.factor_low, spec.factor_high));
    s.logs.push_back(acc);
  }
  return s;
}

/// {B, BF, BF^3, BF^6, ...}: element n is B * F^((n^2+n)/2).
inline LogSeries gen_super(double base, double factor, std::size_t count) {
  if (!(base > 0.0)) throw std::domain_error("gen_super: base must be positive");
  if (!(factor > 1.0)) throw std::domain_error("gen_super: factor must exceed 1");
  if (count < 1) throw std::domain_error("gen_super: count must be at least 1");
  const double lb = std::log10(base);
  const double lf = std::log10(factor);
  LogSeries s;
  s.meta = "super base=" + std::to_string(base) +
           " factor=" + std::to_string(factor);
  s.logs.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    const auto tri = static_cast<double>(n * (n + 1) / 2);
    s.logs[n] = lb + tri * lf;
  }
  return s;
}

namespace detail {

// Neumaier-compensated running sum of log10(k).
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

/// {1!, 2!, 3!, ...}; element n is (n+1)!.
inline LogSeries gen_factorial(std::size_t count) {
  if (count < 1) throw std::domain_error("gen_factorial: count must be at least 1");
  LogSeries s;
  s.meta = "factorial";
  s.logs.reserve(count);
  detail::CompensatedSum acc;
  for (std::size_t k = 1; k <= count; ++k) {
    acc.add(std::log10(static_cast<double>(k)));
    s.logs.push_back(acc.value());
  }
  return s;
}

/// {1^1, 2^2, 3^3, ...}; element n is (n+1)^(n+1).
inline LogSeries gen_selfpowered(std::size_t count) {
  if (count < 1) throw std::domain_error("gen_selfpowered: count must be at least 1");
  LogSeries s;
  s.meta = "selfpowered";
  s.logs.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    const auto m = static_cast<double>(n + 1);
    s.logs[n] = m * std::log10(m);
  }
  return s;
}

/// Readings of X(t) = B * F^t taken every `stride` periods, `count` readings.
inline LogSeries sample_continuous(double base, double factor_per_period,
                                   double stride, std::size_t count) {
  if (!(base > 0.0)) throw std::domain_error("sample_continuous: base must be positive");
  if (!(factor_per_period > 1.0)) {
    throw std::domain_error("sample_continuous: factor must exceed 1");
  }
  if (!(stride > 0.0)) throw std::domain_error("sample_continuous: stride must be positive");
  const double lb = std::log10(base);
  const double lf = std::log10(factor_per_period);
  LogSeries s;
  s.meta = "continuous base=" + std::to_string(base) +
           " factor=" + std::to_string(factor_per_period) +
           " stride=" + std::to_string(stride);
  s.logs.resize(count);
  for (std::size_t n = 0; n < count; ++n) {
    s.logs[n] = lb + (static_cast<double>(n) * stride) * lf;
  }
  return s;
}

/// log10(last) - log10(first): the order of magnitude the series spans.
inline double exponent_difference(std::span<const double> logs) {
  if (logs.empty()) throw std::domain_error("exponent_difference: empty series");
  return logs.back() - logs.front();
}

}  // namespace benlab
