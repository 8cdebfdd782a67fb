#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "benlab/contlaw.hpp"
#include "benlab/digits.hpp"
#include "benlab/random.hpp"
#include "benlab/series.hpp"

using namespace benlab;

namespace {

double rate_from_log_one_fortieth() { return 100.0 * (std::pow(10.0, 1.0 / 40.0) - 1.0); }

}  // namespace

TEST(CrossingTime, Examples) {
  EXPECT_NEAR(crossing_time(1.05, 2), 14.2, 0.05);
  EXPECT_NEAR(crossing_time(1.05, 10), 47.2, 0.05);
  EXPECT_EQ(crossing_time(3.0, 1), 0.0);
  EXPECT_NEAR(crossing_time(10.0, 10), 1.0, 1e-15);
  EXPECT_THROW(crossing_time(1.0, 2), std::domain_error);
  EXPECT_THROW(crossing_time(0.5, 2), std::domain_error);
  EXPECT_THROW(crossing_time(1.05, 0.5), std::domain_error);
}

TEST(CrossingTable, FivePercent) {
  const auto t = crossing_table(1.05);
  const double printed[] = {0.0, 14.2, 22.5, 28.4, 33.0, 36.7, 39.9, 42.6, 45.0, 47.2};
  ASSERT_EQ(t.rows.size(), 10u);
  for (int q = 0; q < 10; ++q) {
    EXPECT_EQ(t.rows[q].quantity, q + 1.0);
    EXPECT_NEAR(t.rows[q].time, printed[q], 0.05) << q + 1;
    if (q > 0) {
      EXPECT_GT(t.rows[q].time, t.rows[q - 1].time);
    }
    EXPECT_NEAR(t.rows[q].time, std::log(q + 1.0) / std::log(1.05), 1e-12);
  }
  EXPECT_THROW(crossing_table(1.05, 0.0), std::domain_error);
  EXPECT_EQ(crossing_table(1.05, 3.0).rows[9].quantity, 30.0);
}

TEST(DwellIntervals, FivePercent) {
  const auto iv = dwell_intervals(1.05);
  const double printed[] = {14.2, 8.3, 5.9, 4.6, 3.7, 3.2, 2.7, 2.4, 2.2};
  double total = 0;
  for (int d = 0; d < 9; ++d) {
    EXPECT_EQ(iv[d].digit, d + 1);
    EXPECT_NEAR(iv[d].periods, printed[d], 0.05);
    total += iv[d].periods;
  }
  EXPECT_NEAR(total, crossing_time(1.05, 10), 1e-12);
  double ten = 0;
  for (const auto& i : dwell_intervals(10.0)) ten += i.periods;
  EXPECT_NEAR(ten, 1.0, 1e-12);
}

TEST(DwellProportions, FivePercent) {
  const auto p = dwell_proportions(1.05);
  EXPECT_NEAR(100 * p.proportions[0], 30.1, 0.05);
  EXPECT_NEAR(100 * p.proportions[8], 4.6, 0.05);
  EXPECT_THROW(dwell_proportions(1.0), std::domain_error);
}

TEST(DwellProportions, PropertyFIndependence) {
  auto rng = SplitMix64(1234);
  const auto ref = benford_expected();
  for (int i = 0; i < 100; ++i) {
    const double F = std::exp(rng.uniform(std::log(1.000001), std::log(100.0)));
    const auto p = dwell_proportions(F);
    double sum = 0;
    for (int d = 0; d < 9; ++d) {
      EXPECT_NEAR(p.proportions[d], ref.probs[d], 1e-12) << F;
      sum += p.proportions[d];
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
  // Rational-log factor: the continuous law still holds.
  const auto r = dwell_proportions(std::pow(10.0, 1.0 / 40.0));
  for (int d = 0; d < 9; ++d) EXPECT_NEAR(r.proportions[d], ref.probs[d], 1e-12);
}

TEST(DwellProportions, PropertyDecadeShift) {
  // Time spent between B*d and B*(d+1) does not depend on B.
  for (double B : {1.0, 3.0, 0.07, 12345.0}) {
    for (int d = 1; d <= 9; ++d) {
      const double t = crossing_time(1.05, (B * (d + 1)) / B) - crossing_time(1.05, (B * d) / B);
      EXPECT_NEAR(t, dwell_intervals(1.05)[d - 1].periods, 1e-12);
    }
  }
}

TEST(DwellProportions, PropertyMatchesDenseSampling) {
  const double F = 1.000001;
  const double lf = std::log10(F);
  const auto count = static_cast<std::size_t>(std::floor(1.0 / lf));
  const auto s = sample_continuous(1.0, F, 1.0, count);
  const auto dd = digit_distribution(s);
  const auto p = dwell_proportions(F);
  for (int d = 1; d <= 9; ++d) EXPECT_NEAR(dd.percent(d), 100 * p.proportions[d - 1], 0.01);
}

TEST(SubperiodRate, PerSecond) {
  const double yearly = rate_from_log_one_fortieth();
  // 0.0000001825% printed; one unit in the last digit.
  EXPECT_NEAR(subperiod_rate_percent(yearly, 60.0 * 60 * 24 * 365), 0.0000001825, 1e-10);
}

TEST(SubperiodRate, Compounds) {
  EXPECT_NEAR(subperiod_rate_percent(5, 12), 100 * (std::pow(1.05, 1.0 / 12) - 1), 1e-12);
  EXPECT_NEAR(subperiod_rate_percent(21, 2), 10.0, 1e-12);
  EXPECT_NEAR(subperiod_rate_percent(7, 1), 7.0, 1e-12);
  EXPECT_THROW(subperiod_rate_percent(-100, 2), std::domain_error);
  EXPECT_THROW(subperiod_rate_percent(5, 0), std::domain_error);
}
