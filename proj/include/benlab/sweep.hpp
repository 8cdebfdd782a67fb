#pragma once

// Empirical engines over many growth rates: minimum-SSD length calibration,
// systematic rate sweeps and random-rate experiments.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "benlab/digits.hpp"
#include "benlab/parallel.hpp"
#include "benlab/random.hpp"

namespace benlab {

/// Series lengths (element counts) tried per rate; the one whose exponent
/// difference lands nearest an integer usually wins.
inline const std::vector<std::size_t>& default_lengths() {
  static const std::vector<std::size_t> v = {3000, 2897, 2800, 2697, 2597,
                                             2297, 2284, 2262, 1930, 1759,
                                             1433, 1268, 822};
  return v;
}

inline constexpr double kRegisterThreshold = 8.88;
inline constexpr std::size_t kDefaultMaxEvaluations = 5'000'000;

struct SweepRecord {
  double rate_percent = 0.0;
  std::size_t best_length = 0;
  double min_ssd = 0.0;
  double exponent_diff = 0.0;
};

/// log10 of the largest finite double. Passing it as `log_ceiling` mimics a
/// program that multiplies out B*F^n in doubles and stops at overflow.
inline constexpr double kDoubleLogCeiling = 308.25471555991675;

/// SSD of the fixed-rate series B, BF, ... for each length; returns the
/// smallest (first listed length wins ties). One pass over the longest series,
/// tallying digits as it goes. Elements with log10 above `log_ceiling` are
/// dropped, so every length is cut back to the elements below it.
inline SweepRecord best_ssd_over_lengths(
    double rate_percent, double base, std::span<const std::size_t> lengths,
    double log_ceiling = std::numeric_limits<double>::infinity()) {
  if (!(rate_percent > 0.0)) throw std::domain_error("best_ssd_over_lengths: rate must be positive");
  if (!(base > 0.0)) throw std::domain_error("best_ssd_over_lengths: base must be positive");
  if (lengths.empty()) throw std::domain_error("best_ssd_over_lengths: no lengths given");
  for (auto len : lengths) {
    if (len < 1) throw std::domain_error("best_ssd_over_lengths: lengths must be >= 1");
  }

  std::vector<std::size_t> order(lengths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return lengths[a] < lengths[b]; });

  const double lb = std::log10(base);
  const double lf = std::log10(1.0 + rate_percent / 100.0);
  std::vector<double> ssd_at(lengths.size());
  DigitCounter counter;
  std::size_t next = 0;
  const std::size_t longest = lengths[order.back()];
  std::vector<std::size_t> used(lengths.size());
  for (std::size_t n = 0; n < longest; ++n) {
    const double lg = lb + static_cast<double>(n) * lf;
    if (lg > log_ceiling) break;
    counter.add_log(lg);
    while (next < order.size() && lengths[order[next]] == n + 1) {
      ssd_at[order[next]] = counter.distribution().ssd;
      used[order[next]] = n + 1;
      ++next;
    }
  }
  if (next < order.size()) {
    if (counter.total() == 0) {
      throw std::domain_error("best_ssd_over_lengths: base already above the log ceiling");
    }
    const double cut = counter.distribution().ssd;
    for (; next < order.size(); ++next) {
      ssd_at[order[next]] = cut;
      used[order[next]] = static_cast<std::size_t>(counter.total());
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    if (ssd_at[i] < ssd_at[best]) best = i;
  }
  return {rate_percent, used[best], ssd_at[best],
          static_cast<double>(used[best] - 1) * lf};
}

struct SweepOptions {
  double base = 3.0;
  std::vector<std::size_t> lengths = default_lengths();
  double register_threshold = kRegisterThreshold;
  double log_ceiling = std::numeric_limits<double>::infinity();
  std::size_t max_evaluations = kDefaultMaxEvaluations;
  unsigned workers = 0;
  std::function<void(std::size_t done, std::size_t total)> progress;
};

struct SweepResult {
  std::vector<SweepRecord> registered;
  std::size_t grid_size = 0;
};

/// Number of grid rates start, start+inc, ... not exceeding end.
inline std::size_t sweep_grid_size(double start, double end, double increment) {
  if (!(start < end)) throw std::domain_error("sweep: start must be below end");
  if (!(increment > 0.0)) throw std::domain_error("sweep: increment must be positive");
  return static_cast<std::size_t>(std::floor((end - start) / increment + 1e-9)) + 1;
}

/// Evaluates every grid rate and keeps those with min SSD above the
/// threshold, in ascending rate order.
inline SweepResult sweep_range(double start, double end, double increment,
                               const SweepOptions& opt) {
  const std::size_t n = sweep_grid_size(start, end, increment);
  if (opt.lengths.empty()) throw std::domain_error("sweep: no lengths given");
  const std::size_t evals = n * opt.lengths.size();
  if (evals > opt.max_evaluations) {
    throw std::length_error(
        "sweep: " + std::to_string(n) + " rates x " +
        std::to_string(opt.lengths.size()) + " lengths = " +
        std::to_string(evals) + " evaluations exceeds the cap of " +
        std::to_string(opt.max_evaluations) + "; raise the cap explicitly");
  }

  std::mutex progress_mutex;
  std::size_t done = 0;
  const std::size_t chunk = 256;
  auto chunks = parallel_chunks(n, chunk, opt.workers, [&](std::size_t b, std::size_t e) {
    std::vector<SweepRecord> hits;
    for (std::size_t i = b; i < e; ++i) {
      const double rate = start + static_cast<double>(i) * increment;
      auto rec = best_ssd_over_lengths(rate, opt.base, opt.lengths, opt.log_ceiling);
      if (rec.min_ssd > opt.register_threshold) hits.push_back(rec);
    }
    if (opt.progress) {
      std::lock_guard lock(progress_mutex);
      done += e - b;
      opt.progress(done, n);
    }
    return hits;
  });

  SweepResult out;
  out.grid_size = n;
  for (auto& c : chunks) {
    out.registered.insert(out.registered.end(), c.begin(), c.end());
  }
  return out;
}

/// A maximal run of consecutive registered grid rates.
struct RateCluster {
  double first_rate = 0.0;
  double last_rate = 0.0;
  std::size_t members = 0;
  double peak_ssd = 0.0;
  double peak_rate = 0.0;

  double center() const { return 0.5 * (first_rate + last_rate); }
  double width() const { return last_rate - first_rate; }
};

inline std::vector<RateCluster> find_clusters(std::span<const SweepRecord> registered,
                                              double increment) {
  std::vector<RateCluster> out;
  for (const auto& r : registered) {
    if (out.empty() || r.rate_percent - out.back().last_rate > 1.5 * increment) {
      out.push_back({r.rate_percent, r.rate_percent, 0, r.min_ssd, r.rate_percent});
    }
    auto& c = out.back();
    c.last_rate = r.rate_percent;
    ++c.members;
    if (r.min_ssd > c.peak_ssd) {
      c.peak_ssd = r.min_ssd;
      c.peak_rate = r.rate_percent;
    }
  }
  return out;
}

struct ExperimentSummary {
  std::size_t count = 0;
  double mean_ssd = 0.0;
  double median_ssd = 0.0;
  std::size_t n_over_10 = 0;
  std::size_t n_over_50 = 0;
  std::size_t n_over_100 = 0;
};

inline ExperimentSummary summarize_ssd(std::vector<double> values) {
  if (values.empty()) throw std::domain_error("summarize_ssd: no values");
  ExperimentSummary s;
  s.count = values.size();
  double acc = 0.0;
  for (double v : values) {
    acc += v;
    s.n_over_10 += v > 10.0;
    s.n_over_50 += v > 50.0;
    s.n_over_100 += v > 100.0;
  }
  s.mean_ssd = acc / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  s.median_ssd = values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
  return s;
}

/// Rates drawn uniformly from [low, high) percent, one independent stream
/// per sample index, each scored by its minimum SSD over `lengths`.
inline ExperimentSummary random_rate_experiment(double low_percent, double high_percent,
                                                std::size_t samples, double base,
                                                std::span<const std::size_t> lengths,
                                                std::uint64_t seed, unsigned workers = 0,
                                                double log_ceiling =
                                                    std::numeric_limits<double>::infinity()) {
  if (!(low_percent > 0.0) || !(high_percent > low_percent)) {
    throw std::domain_error("random_rate_experiment: need 0 < low < high");
  }
  if (samples < 1) throw std::domain_error("random_rate_experiment: samples must be >= 1");
  auto chunks = parallel_chunks(samples, 512, workers, [&](std::size_t b, std::size_t e) {
    std::vector<double> out;
    out.reserve(e - b);
    for (std::size_t i = b; i < e; ++i) {
      auto rng = SplitMix64::stream(seed, i);
      const double rate = rng.uniform(low_percent, high_percent);
      out.push_back(best_ssd_over_lengths(rate, base, lengths, log_ceiling).min_ssd);
    }
    return out;
  });
  std::vector<double> all;
  all.reserve(samples);
  for (auto& c : chunks) all.insert(all.end(), c.begin(), c.end());
  return summarize_ssd(std::move(all));
}

}  // namespace benlab
