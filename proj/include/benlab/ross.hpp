#pragma once

// Populations of random growth series, tallying the leading digit of each
// series' last term (a census snapshot of many independently growing cities).

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "benlab/digits.hpp"
#include "benlab/parallel.hpp"
#include "benlab/random.hpp"

namespace benlab {

enum class RossModel { model1, model2, inverted };

inline const char* to_string(RossModel m) {
  switch (m) {
    case RossModel::model1: return "model1";
    case RossModel::model2: return "model2";
    case RossModel::inverted: return "inverted";
  }
  return "?";
}

struct RossConfig {
  RossModel model = RossModel::model1;
  std::size_t periods = 20;      ///< N for model1/model2, max age for inverted
  std::size_t population = 100'000;
  std::uint64_t seed = 0;
  double base = 3.0;             ///< inverted model only
  double factor = 1.07;          ///< inverted model only
  double uniform_low = 1.0;      ///< support (low, high] of B and F draws
  double uniform_high = 10.0;
  bool tally_trajectory = false; ///< count every term, not just the last
  unsigned workers = 0;

  void validate() const {
    if (population < 1) throw std::domain_error("ross: population must be >= 1");
    if (!(uniform_low > 0.0) || !(uniform_high > uniform_low)) {
      throw std::domain_error("ross: need 0 < uniform_low < uniform_high");
    }
    if (model == RossModel::inverted) {
      if (!(base > 0.0)) throw std::domain_error("ross: base must be positive");
      if (!(factor > 1.0)) throw std::domain_error("ross: factor must exceed 1");
    }
  }
};

/// Runs the configured model; each series draws from its own stream keyed by
/// (seed, series index).
inline DigitDistribution ross_simulate(const RossConfig& cfg) {
  cfg.validate();
  const double lo = cfg.uniform_low;
  const double hi = cfg.uniform_high;
  const double inv_lb = std::log10(cfg.base);
  const double inv_lf = std::log10(cfg.factor);

  auto chunks = parallel_chunks(cfg.population, 4096, cfg.workers,
                                [&](std::size_t b, std::size_t e) {
    DigitCounter counter;
    for (std::size_t i = b; i < e; ++i) {
      auto rng = SplitMix64::stream(cfg.seed, i);
      switch (cfg.model) {
        case RossModel::model1: {
          const double lb = std::log10(rng.uniform_left_open(lo, hi));
          const double lf = std::log10(rng.uniform_left_open(lo, hi));
          if (cfg.tally_trajectory) {
            for (std::size_t n = 0; n <= cfg.periods; ++n) {
              counter.add_log(lb + static_cast<double>(n) * lf);
            }
          } else {
            counter.add_log(lb + static_cast<double>(cfg.periods) * lf);
          }
          break;
        }
        case RossModel::model2: {
          double acc = std::log10(rng.uniform_left_open(lo, hi));
          if (cfg.tally_trajectory) counter.add_log(acc);
          for (std::size_t n = 0; n < cfg.periods; ++n) {
            acc += std::log10(rng.uniform_left_open(lo, hi));
            if (cfg.tally_trajectory) counter.add_log(acc);
          }
          if (!cfg.tally_trajectory) counter.add_log(acc);
          break;
        }
        case RossModel::inverted: {
          const auto age = rng.uniform_int_inclusive(cfg.periods);
          counter.add_log(inv_lb + static_cast<double>(age) * inv_lf);
          break;
        }
      }
    }
    return counter;
  });

  DigitCounter total;
  for (const auto& c : chunks) total.merge(c);
  return total.distribution();
}

/// B, F ~ Uniform(1, 10], one F per series; last term B * F^N.
inline DigitDistribution ross_model1(std::size_t periods, std::size_t population,
                                     std::uint64_t seed, unsigned workers = 0) {
  RossConfig c;
  c.model = RossModel::model1;
  c.periods = periods;
  c.population = population;
  c.seed = seed;
  c.workers = workers;
  return ross_simulate(c);
}

/// As model 1 but F is redrawn every period.
inline DigitDistribution ross_model2(std::size_t periods, std::size_t population,
                                     std::uint64_t seed, unsigned workers = 0) {
  RossConfig c;
  c.model = RossModel::model2;
  c.periods = periods;
  c.population = population;
  c.seed = seed;
  c.workers = workers;
  return ross_simulate(c);
}

/// Fixed B and F, age ~ DiscreteUniform{0..max_age}.
inline DigitDistribution ross_inverted(double base, double factor, std::size_t max_age,
                                       std::size_t population, std::uint64_t seed,
                                       unsigned workers = 0) {
  RossConfig c;
  c.model = RossModel::inverted;
  c.base = base;
  c.factor = factor;
  c.periods = max_age;
  c.population = population;
  c.seed = seed;
  c.workers = workers;
  return ross_simulate(c);
}

}  // namespace benlab
