#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = benlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(Cli, SeriesDigitTable) {
  const auto r = run({"series", "--base", "10", "--percent", "7", "--periods", "34", "--emit", "digits"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 10u);
  EXPECT_EQ(l[0], "digit,count,percent,benford_percent");
  EXPECT_EQ(l[1].substr(0, 5), "1,11,");
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, SeriesCsvRoundTrips) {
  const auto r = run({"series", "--percent", "7", "--periods", "3"});
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[0], "index,log10,significand,first_digit");
  const std::string lg = l[2].substr(2, l[2].find(',', 2) - 2);
  EXPECT_EQ(std::stod(lg), std::log10(1.07));
}

TEST(Cli, FactorEqualsPercent) {
  const auto a = run({"series", "--percent", "7", "--periods", "20", "--emit", "digits"});
  const auto b = run({"series", "--factor", "1.07", "--periods", "20", "--emit", "digits"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PairsCount) {
  const auto r = run({"pairs", "--ptop", "900", "--tmax", "50", "--count-only"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "774\n");
  const auto l = lines(run({"pairs", "--ptop", "100"}).out);
  EXPECT_EQ(l.size(), 233u);
  EXPECT_EQ(l[0], "T,L,rate_percent,deviation");
}

TEST(Cli, DwellTable) {
  const auto r = run({"dwell", "--factor", "1.05"});
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 10u);
  EXPECT_EQ(l[0], "digit,from,to,interval_periods,proportion,benford");
  EXPECT_EQ(l[1].substr(0, 13), "1,1,2,14.2066");
  const auto c = lines(run({"dwell", "--percent", "5", "--table", "crossing"}).out);
  ASSERT_EQ(c.size(), 11u);
  EXPECT_EQ(c[0], "quantity,time_periods");
  EXPECT_EQ(c[1], "1,0");
}

TEST(Cli, Detect) {
  const auto r = run({"detect", "--logf", "0.25"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.25,true,1,4,0,"), std::string::npos) << r.out;
  const auto n = run({"detect", "--percent", "7"});
  EXPECT_NE(n.out.find(",false,"), std::string::npos);
}

TEST(Cli, SweepAndClusters) {
  const auto r = run({"sweep", "--start", "12", "--end", "12.4", "--increment", "0.01", "--clusters",
                      "--workers", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "first_rate,last_rate,center,width,members,peak_ssd,peak_rate");
  EXPECT_NE(r.err.find("registered"), std::string::npos);
}

TEST(Cli, SweepCapIsDomainError) {
  const auto r = run({"sweep", "--start", "1", "--end", "890", "--increment", "0.00215714598"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST(Cli, ExperimentJson) {
  const auto r = run({"experiment", "--low", "1", "--high", "5", "--samples", "50", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], 50);
  EXPECT_EQ(j["config"]["seed"], 3);
}

TEST(Cli, KxfitMonthly) {
  const auto r = run({"kxfit", "--factor", "1.05", "--subdivisions", "12", "--count", "567",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["k"].get<double>(), 82.4, 0.01);
  EXPECT_EQ(j["counts"][0], 71);
  const auto csv = lines(run({"kxfit", "--factor", "1.05", "--subdivisions", "12", "--count", "567"}).out);
  EXPECT_EQ(csv.size(), 28u);
}

TEST(Cli, RossRequiresSeed) {
  EXPECT_EQ(run({"ross", "--population", "10"}).code, 2);
  const auto r = run({"ross", "--population", "1000", "--seed", "5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["total"], 1000);
  const auto inv = run({"ross", "--model", "inverted", "--percent", "7", "--population", "100",
                        "--seed", "1"});
  EXPECT_EQ(inv.code, 0) << inv.err;
}

TEST(Cli, RandomSeriesNeedsSeed) {
  const auto r = run({"series", "--family", "random", "--periods", "5", "--low-percent", "1",
                      "--high-percent", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--seed"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  const auto both = run({"dwell", "--percent", "5", "--factor", "1.05"});
  EXPECT_EQ(both.code, 2);
  EXPECT_NE(both.err.find("--factor"), std::string::npos);
  const auto none = run({"dwell"});
  EXPECT_EQ(none.code, 2);
  EXPECT_NE(none.err.find("--percent"), std::string::npos);
  const auto unk = run({"pairs", "--ptop", "100", "--nope"});
  EXPECT_EQ(unk.code, 2);
  EXPECT_NE(unk.err.find("--nope"), std::string::npos);
  const auto bad = run({"series", "--percent", "-3", "--periods", "5"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("--percent"), std::string::npos);
  EXPECT_EQ(run({"series", "--percent", "7"}).code, 2);
  EXPECT_EQ(run({"pairs", "--ptop", "abc"}).code, 2);
}

TEST(Cli, DomainErrorExitOne) {
  const auto r = run({"detect", "--logf", "1.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error"), std::string::npos);
}

TEST(Cli, HelpListsUnits) {
  const auto r = run({"series", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PERCENT"), std::string::npos);
  EXPECT_NE(r.out.find("FACTOR"), std::string::npos);
  EXPECT_NE(r.out.find("--periods"), std::string::npos);
  for (const char* sub : {"digits", "pairs", "detect", "sweep", "experiment", "kxfit", "dwell", "ross"}) {
    const auto h = run({sub, "--help"});
    EXPECT_EQ(h.code, 0) << sub;
    EXPECT_NE(h.out.find("--out"), std::string::npos) << sub;
  }
}

TEST(Cli, OutWritesFileAndManifest) {
  const auto dir = std::filesystem::temp_directory_path() / "benlab_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "ross.csv").string();
  const auto r = run({"ross", "--population", "500", "--seed", "11", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream csv(path);
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "digit,count,percent,benford_percent");
  std::ifstream mf(path + ".manifest.json");
  ASSERT_TRUE(mf.good());
  const auto m = nlohmann::json::parse(mf);
  EXPECT_EQ(m["subcommand"], "ross");
  EXPECT_EQ(m["seed"], 11);
  EXPECT_EQ(m["parameters"]["--population"], "500");
  EXPECT_EQ(m["parameters"]["--model"], "model1");
  EXPECT_TRUE(m.contains("timestamp"));
  EXPECT_TRUE(m.contains("tool_version"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, DigitsFromFile) {
  const auto dir = std::filesystem::temp_directory_path() / "benlab_cli_digits";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "in.txt").string();
  {
    std::ofstream f(path);
    f << "613 -0.456398, 1\n0 750\n";
  }
  const auto r = run({"digits", "--in", path, "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total"], 4);
  EXPECT_EQ(j["skipped_zero"], 1);
  EXPECT_EQ(j["counts"][5], 1);
  {
    std::ofstream f(path);
    f << "12 abc\n";
  }
  EXPECT_EQ(run({"digits", "--in", path}).code, 1);
  EXPECT_EQ(run({"digits", "--in", (dir / "missing").string()}).code, 2);
  const auto b = run({"digits", "--benford"});
  EXPECT_EQ(lines(b.out).size(), 10u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ByteIdenticalReruns) {
  const std::vector<std::vector<std::string>> cmds = {
      {"series", "--family", "random", "--periods", "50", "--low-percent", "1", "--high-percent", "9",
       "--seed", "4"},
      {"ross", "--model", "model2", "--population", "2000", "--seed", "8", "--workers", "3"},
      {"experiment", "--samples", "40", "--seed", "2", "--workers", "2"},
      {"series", "--family", "factorial", "--count", "170", "--emit", "summary"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, Fmt) {
  EXPECT_EQ(benlab::cli::fmt(0.1), "0.1");
  EXPECT_EQ(benlab::cli::fmt(3.0), "3");
  EXPECT_EQ(std::stod(benlab::cli::fmt(1.0 / 3.0)), 1.0 / 3.0);
}
