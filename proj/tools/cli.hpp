#pragma once

// Command-line front end. `run` is separate from main so tests can drive it
// with in-memory streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "benlab/benlab.hpp"

namespace benlab::cli {

inline constexpr const char* kToolVersion = "benlab 1.0.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest representation that parses back to the same double.
inline std::string fmt(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}

  template <typename... Cols>
  void row(const Cols&... cols) {
    bool first = true;
    ((os_ << (first ? "" : ",") << cell(cols), first = false), ...);
    os_ << '\n';
  }

 private:
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  static std::string cell(double v) { return fmt(v); }
  template <typename I>
    requires std::is_integral_v<I>
  static std::string cell(I v) { return std::to_string(v); }

  std::ostream& os_;
};

namespace detail {

inline std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::array<char, 32> buf{};
  std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf.data();
}

inline std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t v = 0;
    auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size() || v == 0) {
      throw UsageError("--lengths: '" + tok + "' is not a positive integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--lengths: empty list");
  return out;
}

inline void write_digit_table(std::ostream& os, const DigitDistribution& dd) {
  const auto ref = benford_expected();
  CsvWriter csv(os);
  csv.row("digit", "count", "percent", "benford_percent");
  for (int d = 1; d <= kDigitCount; ++d) {
    csv.row(d, dd.count(d), dd.percent(d), ref.percent(d));
  }
}

inline nlohmann::json digit_json(const DigitDistribution& dd) {
  nlohmann::json j;
  j["counts"] = dd.counts;
  j["total"] = dd.total;
  j["percents"] = dd.percents();
  j["ssd"] = dd.ssd;
  return j;
}

// Rate given either as --percent or --factor.
struct RateFlags {
  CLI::Option* percent_opt = nullptr;
  CLI::Option* factor_opt = nullptr;
  double percent = 0.0;
  double factor = 0.0;

  void add(CLI::App* app, bool required_one = true) {
    percent_opt = app->add_option("--percent", percent,
                                  "growth rate per period in PERCENT (7 means F = 1.07)");
    factor_opt = app->add_option("--factor", factor,
                                 "growth FACTOR per period (1.07 means 7%); excludes --percent");
    percent_opt->excludes(factor_opt);
    required_ = required_one;
  }
  bool given() const { return percent_opt->count() > 0 || factor_opt->count() > 0; }
  double resolve() const {
    if (percent_opt->count() > 0) {
      if (!(percent > 0.0)) throw UsageError("--percent: must be positive");
      return 1.0 + percent / 100.0;
    }
    if (factor_opt->count() > 0) {
      if (!(factor > 1.0)) throw UsageError("--factor: must exceed 1");
      return factor;
    }
    throw UsageError("one of --percent or --factor is required");
  }

 private:
  bool required_ = true;
};

}  // namespace detail

/// Parses argv (without the program name) and runs one subcommand.
/// Returns 0 on success, 2 on usage errors, 1 on domain errors.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Leading-digit laboratory for exponential growth series", "benlab"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough(false);

  std::string out_path = "-";
  std::string manifest_path;
  unsigned workers = workers_from_env();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "output file ('-' = stdout); writes <out>.manifest.json alongside")
        ->capture_default_str();
    sub->add_option("--manifest", manifest_path, "explicit path for the run manifest JSON");
  };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", workers,
                    "worker threads (0 = all cores; default from BENLAB_WORKERS)")
        ->capture_default_str();
  };

  // digits
  auto* digits = app.add_subcommand("digits", "leading-digit table of numbers read from a file or stdin");
  std::string digits_in = "-";
  bool digits_logs = false;
  bool digits_benford = false;
  std::string digits_format = "csv";
  digits->add_option("--in", digits_in, "input path, whitespace/comma separated numbers ('-' = stdin)")
      ->capture_default_str();
  digits->add_flag("--logs", digits_logs, "input values are log10 values, not quantities");
  digits->add_flag("--benford", digits_benford, "print only the Benford reference table");
  digits->add_option("--format", digits_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  add_common(digits);

  // series
  auto* series = app.add_subcommand("series", "generate a growth series and emit it, its digits or a summary");
  std::string family = "fixed";
  double base = 1.0;
  detail::RateFlags series_rate;
  std::size_t periods = 0;
  std::size_t count = 0;
  double stride = 1.0;
  double low_percent = 0.0, high_percent = 0.0;
  std::uint64_t seed = 0;
  std::string emit = "series";
  series->add_option("--family", family, "fixed | random | super | factorial | selfpowered | continuous")
      ->check(CLI::IsMember({"fixed", "random", "super", "factorial", "selfpowered", "continuous"}))
      ->capture_default_str();
  series->add_option("--base", base, "initial quantity B (fixed, random, super, continuous)")
      ->capture_default_str();
  series_rate.add(series);
  auto* periods_opt = series->add_option("--periods", periods,
                                         "number of growth periods N; fixed/random emit N+1 elements");
  auto* count_opt = series->add_option("--count", count,
                                       "number of elements (super, factorial, selfpowered, continuous)");
  series->add_option("--stride", stride, "continuous: periods between readings (decimal allowed)")
      ->capture_default_str();
  auto* low_opt = series->add_option("--low-percent", low_percent,
                                     "random: lowest per-period rate in PERCENT");
  auto* high_opt = series->add_option("--high-percent", high_percent,
                                      "random: highest per-period rate in PERCENT");
  auto* series_seed = series->add_option("--seed", seed, "RNG seed (required for --family random)");
  series->add_option("--emit", emit, "series | digits | summary")
      ->check(CLI::IsMember({"series", "digits", "summary"}))->capture_default_str();
  add_common(series);

  // pairs
  auto* pairs = app.add_subcommand("pairs", "enumerate reduced disruptive {T, L} pairs with rate <= Ptop");
  double ptop = 0.0;
  long long tmax = 50;
  bool count_only = false;
  pairs->add_option("--ptop", ptop, "top of the percent interval (0, Ptop], in PERCENT")->required();
  pairs->add_option("--tmax", tmax, "largest cycle length T")->capture_default_str();
  pairs->add_flag("--count-only", count_only, "print only the number of reduced pairs");
  add_common(pairs);

  // detect
  auto* detect = app.add_subcommand("detect", "test whether log10(F) is near a rational L/T");
  detail::RateFlags detect_rate;
  double logf_value = 0.0;
  double tol = 1e-9;
  detect_rate.add(detect);
  auto* logf_opt = detect->add_option("--logf", logf_value, "log10 of the growth FACTOR directly");
  logf_opt->excludes(detect_rate.percent_opt)->excludes(detect_rate.factor_opt);
  detect->add_option("--tmax", tmax, "largest denominator T searched")->capture_default_str();
  detect->add_option("--tol", tol, "maximum |log10 F - L/T| accepted")->capture_default_str();
  add_common(detect);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "min-SSD scan over a grid of growth rates");
  double start = 1.0, end = 890.0, increment = 0.0;
  std::string lengths_text;
  double threshold = kRegisterThreshold;
  double max_evals = static_cast<double>(kDefaultMaxEvaluations);
  bool progress = false;
  bool clusters = false;
  bool cut_overflow = false;
  double sweep_base = 3.0;
  sweep->add_option("--start", start, "first rate in PERCENT")->capture_default_str();
  sweep->add_option("--end", end, "last rate in PERCENT")->capture_default_str();
  sweep->add_option("--increment", increment, "grid step in PERCENT")->required();
  sweep->add_option("--base", sweep_base, "initial quantity of every series")->capture_default_str();
  sweep->add_option("--lengths", lengths_text, "comma-separated element counts (default: 3000,2897,...,822)");
  sweep->add_option("--threshold", threshold, "register rates whose min SSD exceeds this")
      ->capture_default_str();
  sweep->add_option("--max-evals", max_evals, "refuse grids above this many rate x length evaluations")
      ->capture_default_str();
  sweep->add_flag("--progress", progress, "report progress on stderr");
  sweep->add_flag("--clusters", clusters, "emit clusters of adjacent registered rates instead of records");
  sweep->add_flag("--cut-at-overflow", cut_overflow,
                  "drop elements above the largest double, like a program multiplying in doubles");
  add_workers(sweep);
  add_common(sweep);

  // experiment
  auto* experiment = app.add_subcommand("experiment", "min-SSD statistics over uniformly random rates");
  double exp_low = 1.0, exp_high = 50.0, exp_base = 3.0;
  std::size_t samples = 30000;
  experiment->add_option("--low", exp_low, "lowest rate in PERCENT")->capture_default_str();
  experiment->add_option("--high", exp_high, "highest rate in PERCENT")->capture_default_str();
  experiment->add_option("--samples", samples, "number of random rates")->capture_default_str();
  experiment->add_option("--base", exp_base, "initial quantity of every series")->capture_default_str();
  experiment->add_option("--lengths", lengths_text, "comma-separated element counts (default: 3000,...,822)");
  experiment->add_option("--seed", seed, "RNG seed")->required();
  experiment->add_flag("--cut-at-overflow", cut_overflow,
                       "drop elements above the largest double, like a program multiplying in doubles");
  add_workers(experiment);
  add_common(experiment);

  // kxfit
  auto* kxfit = app.add_subcommand("kxfit", "histogram a series over [lo, hi] and fit k/x");
  detail::RateFlags kx_rate;
  double kx_base = 1.0, lo = 1.0, hi = 10.0;
  double subdivisions = 1.0;
  std::size_t bins = 27;
  std::size_t kx_count = 0;
  std::string kx_format = "csv";
  kxfit->add_option("--base", kx_base, "initial quantity")->capture_default_str();
  kx_rate.add(kxfit);
  kxfit->add_option("--subdivisions", subdivisions,
                    "readings per growth period, e.g. 12 for monthly readings of yearly growth")
      ->capture_default_str();
  kxfit->add_option("--count", kx_count, "number of readings (elements)")->required();
  kxfit->add_option("--lo", lo, "histogram lower bound (quantity)")->capture_default_str();
  kxfit->add_option("--hi", hi, "histogram upper bound (quantity)")->capture_default_str();
  kxfit->add_option("--bins", bins, "number of equal-width bins")->capture_default_str();
  kxfit->add_option("--format", kx_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  add_common(kxfit);

  // dwell
  auto* dwell = app.add_subcommand("dwell", "continuous growth: digit dwell times or crossing times");
  detail::RateFlags dwell_rate;
  std::string table = "dwell";
  double dwell_base = 1.0;
  dwell_rate.add(dwell);
  dwell->add_option("--table", table, "dwell | crossing")
      ->check(CLI::IsMember({"dwell", "crossing"}))->capture_default_str();
  dwell->add_option("--base", dwell_base, "starting quantity for the crossing table")
      ->capture_default_str();
  add_common(dwell);

  // ross
  auto* ross = app.add_subcommand("ross", "digits of the last terms of many random growth series");
  std::string model = "model1";
  std::size_t ross_periods = 20, max_age = 1000, population = 100000;
  double ross_base = 3.0, ulow = 1.0, uhigh = 10.0;
  bool trajectory = false;
  std::string ross_format = "csv";
  detail::RateFlags ross_rate;
  ross->add_option("--model", model, "model1 | model2 | inverted")
      ->check(CLI::IsMember({"model1", "model2", "inverted"}))->capture_default_str();
  ross->add_option("--periods", ross_periods, "growth periods N (model1, model2)")->capture_default_str();
  ross->add_option("--max-age", max_age, "largest age in periods (inverted)")->capture_default_str();
  ross->add_option("--population", population, "number of series")->capture_default_str();
  ross->add_option("--base", ross_base, "fixed initial quantity (inverted)")->capture_default_str();
  ross_rate.add(ross);
  ross->add_option("--uniform-low", ulow, "lower end of the (low, high] draws of B and F (model1, model2)")
      ->capture_default_str();
  ross->add_option("--uniform-high", uhigh, "upper end of the (low, high] draws of B and F (model1, model2)")
      ->capture_default_str();
  ross->add_flag("--trajectory", trajectory, "tally every term of each series, not only the last");
  ross->add_option("--seed", seed, "RNG seed")->required();
  ross->add_option("--format", ross_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  add_workers(ross);
  add_common(ross);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("benlab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help(app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name());
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::ostringstream body;
  std::optional<std::uint64_t> manifest_seed;
  nlohmann::json extra;

  try {
    if (sub == digits) {
      if (digits_benford) {
        const auto ref = benford_expected();
        CsvWriter csv(body);
        csv.row("digit", "benford_percent");
        for (int d = 1; d <= kDigitCount; ++d) csv.row(d, ref.percent(d));
      } else {
        std::unique_ptr<std::ifstream> file;
        std::istream* in = &std::cin;
        if (digits_in != "-") {
          file = std::make_unique<std::ifstream>(digits_in);
          if (!*file) throw UsageError("--in: cannot open '" + digits_in + "'");
          in = file.get();
        }
        DigitCounter counter;
        std::size_t skipped = 0;
        std::string tok;
        while (*in >> tok) {
          std::stringstream parts(tok);
          std::string item;
          while (std::getline(parts, item, ',')) {
            if (item.empty()) continue;
            double v = 0.0;
            auto res = std::from_chars(item.data(), item.data() + item.size(), v);
            if (res.ec != std::errc{} || res.ptr != item.data() + item.size()) {
              throw std::domain_error("digits: '" + item + "' is not a number");
            }
            if (digits_logs) {
              counter.add_log(v);
            } else if (v == 0.0) {
              ++skipped;
            } else {
              counter.add_value(v);
            }
          }
        }
        const auto dd = counter.distribution();
        if (digits_format == "json") {
          auto j = detail::digit_json(dd);
          j["skipped_zero"] = skipped;
          body << j.dump(2) << '\n';
        } else {
          detail::write_digit_table(body, dd);
        }
      }
    } else if (sub == series) {
      LogSeries s;
      auto need_count = [&] {
        if (count_opt->count() == 0) throw UsageError("--count is required for --family " + family);
        if (count < 1) throw UsageError("--count: must be at least 1");
      };
      auto need_periods = [&] {
        if (periods_opt->count() == 0) throw UsageError("--periods is required for --family " + family);
        if (periods < 1) throw UsageError("--periods: must be at least 1");
      };
      if (family == "fixed") {
        need_periods();
        s = gen_fixed({base, series_rate.resolve(), periods});
      } else if (family == "random") {
        need_periods();
        if (low_opt->count() == 0 || high_opt->count() == 0) {
          throw UsageError("--low-percent and --high-percent are required for --family random");
        }
        if (series_seed->count() == 0) throw UsageError("--seed is required for --family random");
        manifest_seed = seed;
        s = gen_random({base, 1.0 + low_percent / 100.0, 1.0 + high_percent / 100.0, periods, seed});
      } else if (family == "super") {
        need_count();
        s = gen_super(base, series_rate.resolve(), count);
      } else if (family == "factorial") {
        need_count();
        s = gen_factorial(count);
      } else if (family == "selfpowered") {
        need_count();
        s = gen_selfpowered(count);
      } else {
        need_count();
        if (!(stride > 0.0)) throw UsageError("--stride: must be positive");
        s = sample_continuous(base, series_rate.resolve(), stride, count);
      }
      if (emit == "series") {
        CsvWriter csv(body);
        csv.row("index", "log10", "significand", "first_digit");
        for (std::size_t i = 0; i < s.size(); ++i) {
          csv.row(i, s[i], s.significand(i), s.first_digit(i));
        }
      } else {
        const auto dd = digit_distribution(s);
        if (emit == "digits") {
          detail::write_digit_table(body, dd);
        } else {
          auto j = detail::digit_json(dd);
          j["elements"] = s.size();
          j["exponent_difference"] = exponent_difference(s);
          j["meta"] = s.meta;
          body << j.dump(2) << '\n';
        }
      }
    } else if (sub == pairs) {
      if (!(ptop > 0.0)) throw UsageError("--ptop: must be positive");
      if (tmax < 1) throw UsageError("--tmax: must be at least 1");
      const auto list = enumerate_pairs(ptop, tmax);
      extra["raw_pairs"] = count_raw_pairs(ptop, tmax);
      if (count_only) {
        body << list.size() << '\n';
      } else {
        CsvWriter csv(body);
        csv.row("T", "L", "rate_percent", "deviation");
        for (const auto& p : list) csv.row(p.T, p.L, p.rate_percent, p.deviation);
      }
    } else if (sub == detect) {
      if (tmax < 1) throw UsageError("--tmax: must be at least 1");
      if (!(tol >= 0.0)) throw UsageError("--tol: must be non-negative");
      double lf = 0.0;
      if (logf_opt->count() > 0) {
        lf = logf_value;
      } else {
        lf = std::log10(detect_rate.resolve());
      }
      const auto r = detect_rational(lf, tmax, tol);
      CsvWriter csv(body);
      csv.row("log10_factor", "found", "L", "T", "error", "rate_percent", "deviation");
      if (r) {
        csv.row(lf, "true", r->L, r->T, r->error, rate_from_pair(r->L, r->T),
                theoretical_deviation(r->T));
      } else {
        csv.row(lf, "false", "", "", "", "", "");
      }
    } else if (sub == sweep) {
      SweepOptions opt;
      opt.base = sweep_base;
      if (!lengths_text.empty()) opt.lengths = detail::parse_lengths(lengths_text);
      opt.register_threshold = threshold;
      if (!(max_evals >= 1.0)) throw UsageError("--max-evals: must be at least 1");
      opt.max_evaluations = static_cast<std::size_t>(max_evals);
      opt.workers = workers;
      if (cut_overflow) opt.log_ceiling = kDoubleLogCeiling;
      if (!(increment > 0.0)) throw UsageError("--increment: must be positive");
      if (!(start > 0.0) || !(end > start)) throw UsageError("--start/--end: need 0 < start < end");
      if (progress) {
        opt.progress = [&err, last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
          const std::size_t pct = 100 * done / total;
          if (pct != last || done == total) {
            err << "\rsweep: " << done << "/" << total << " rates" << std::flush;
            last = pct;
            if (done == total) err << '\n';
          }
        };
      }
      const auto res = sweep_range(start, end, increment, opt);
      extra["grid_size"] = res.grid_size;
      extra["registered"] = res.registered.size();
      err << "sweep: " << res.registered.size() << " of " << res.grid_size
          << " rates registered above SSD " << fmt(threshold) << '\n';
      CsvWriter csv(body);
      if (clusters) {
        csv.row("first_rate", "last_rate", "center", "width", "members", "peak_ssd", "peak_rate");
        for (const auto& c : find_clusters(res.registered, increment)) {
          csv.row(c.first_rate, c.last_rate, c.center(), c.width(), c.members, c.peak_ssd,
                  c.peak_rate);
        }
      } else {
        csv.row("rate_percent", "best_length", "min_ssd", "exponent_diff");
        for (const auto& r : res.registered) {
          csv.row(r.rate_percent, r.best_length, r.min_ssd, r.exponent_diff);
        }
      }
    } else if (sub == experiment) {
      const auto lengths = lengths_text.empty() ? default_lengths() : detail::parse_lengths(lengths_text);
      if (!(exp_low > 0.0) || !(exp_high > exp_low)) throw UsageError("--low/--high: need 0 < low < high");
      if (samples < 1) throw UsageError("--samples: must be at least 1");
      manifest_seed = seed;
      const auto s = random_rate_experiment(exp_low, exp_high, samples, exp_base, lengths, seed,
                                            workers,
                                            cut_overflow ? kDoubleLogCeiling
                                                         : std::numeric_limits<double>::infinity());
      nlohmann::json j;
      j["count"] = s.count;
      j["mean_ssd"] = s.mean_ssd;
      j["median_ssd"] = s.median_ssd;
      j["n_over_10"] = s.n_over_10;
      j["n_over_50"] = s.n_over_50;
      j["n_over_100"] = s.n_over_100;
      j["config"] = {{"low_percent", exp_low}, {"high_percent", exp_high}, {"samples", samples},
                     {"base", exp_base}, {"lengths", lengths}, {"seed", seed},
                     {"cut_at_overflow", cut_overflow}};
      body << j.dump(2) << '\n';
    } else if (sub == kxfit) {
      if (!(subdivisions > 0.0)) throw UsageError("--subdivisions: must be positive");
      if (kx_count < 1) throw UsageError("--count: must be at least 1");
      if (!(lo < hi)) throw UsageError("--lo/--hi: need lo < hi");
      if (bins < 1) throw UsageError("--bins: must be at least 1");
      const auto s = sample_continuous(kx_base, kx_rate.resolve(), 1.0 / subdivisions, kx_count);
      const auto h = histogram(s, lo, hi, bins);
      const auto f = fit_k(h);
      if (kx_format == "json") {
        nlohmann::json j;
        j["k"] = f.k;
        j["sse"] = f.sse;
        j["numerator"] = f.numerator;
        j["denominator"] = f.denominator;
        j["midpoints"] = h.midpoints;
        j["counts"] = h.counts;
        j["excluded"] = h.excluded;
        body << j.dump(2) << '\n';
      } else {
        CsvWriter csv(body);
        csv.row("midpoint", "count", "k_over_midpoint");
        for (std::size_t i = 0; i < h.bin_count; ++i) {
          csv.row(h.midpoints[i], h.counts[i], f.k / h.midpoints[i]);
        }
      }
    } else if (sub == dwell) {
      const double F = dwell_rate.resolve();
      CsvWriter csv(body);
      if (table == "crossing") {
        csv.row("quantity", "time_periods");
        for (const auto& r : crossing_table(F, dwell_base).rows) csv.row(r.quantity, r.time);
      } else {
        const auto iv = dwell_intervals(F);
        const auto p = dwell_proportions(F);
        const auto ref = benford_expected();
        csv.row("digit", "from", "to", "interval_periods", "proportion", "benford");
        for (int d = 1; d <= kDigitCount; ++d) {
          csv.row(d, d, d + 1, iv[d - 1].periods, p.proportions[d - 1], ref.probability(d));
        }
      }
    } else if (sub == ross) {
      RossConfig cfg;
      cfg.model = model == "model1" ? RossModel::model1
                  : model == "model2" ? RossModel::model2
                                      : RossModel::inverted;
      cfg.periods = cfg.model == RossModel::inverted ? max_age : ross_periods;
      cfg.population = population;
      cfg.seed = seed;
      cfg.uniform_low = ulow;
      cfg.uniform_high = uhigh;
      cfg.tally_trajectory = trajectory;
      cfg.workers = workers;
      if (cfg.model == RossModel::inverted) {
        cfg.base = ross_base;
        cfg.factor = ross_rate.resolve();
      }
      if (population < 1) throw UsageError("--population: must be at least 1");
      manifest_seed = seed;
      const auto dd = ross_simulate(cfg);
      if (ross_format == "json") {
        auto j = detail::digit_json(dd);
        j["config"] = {{"model", to_string(cfg.model)}, {"periods", cfg.periods},
                       {"population", cfg.population}, {"seed", seed},
                       {"uniform_low", ulow}, {"uniform_high", uhigh},
                       {"trajectory", trajectory}};
        if (cfg.model == RossModel::inverted) {
          j["config"]["base"] = cfg.base;
          j["config"]["factor"] = cfg.factor;
        }
        body << j.dump(2) << '\n';
      } else {
        detail::write_digit_table(body, dd);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (out_path == "-") {
    out << body.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << out_path << "'\n";
      return 1;
    }
    f << body.str();
    if (manifest_path.empty()) manifest_path = out_path + ".manifest.json";
  }

  if (!manifest_path.empty()) {
    nlohmann::json m;
    m["subcommand"] = sub->get_name();
    nlohmann::json params = nlohmann::json::object();
    for (const CLI::Option* opt : sub->get_options()) {
      const std::string name = opt->get_name(false, true);
      if (name.empty() || name == "--help" || name == "--out" || name == "--manifest") continue;
      if (opt->count() > 0) {
        std::string joined;
        for (const auto& r : opt->results()) joined += (joined.empty() ? "" : ",") + r;
        params[name] = joined;
      } else if (!opt->get_default_str().empty()) {
        params[name] = opt->get_default_str();
      }
    }
    m["parameters"] = params;
    m["seed"] = manifest_seed ? nlohmann::json(*manifest_seed) : nlohmann::json(nullptr);
    m["tool_version"] = kToolVersion;
    m["timestamp"] = detail::utc_timestamp();
    if (!extra.is_null()) m["results"] = extra;
    std::ofstream mf(manifest_path, std::ios::binary);
    if (!mf) {
      err << "error: cannot write manifest '" << manifest_path << "'\n";
      return 1;
    }
    mf << m.dump(2) << '\n';
  }
  return 0;
}

}  // namespace benlab::cli
