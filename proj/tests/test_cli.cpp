#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hankelnd/cli.hpp"

namespace {

using namespace hankelnd;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hankelnd_cli_" + name)).string();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(Cli, ZerosExample) {
  const CliRun r = run({"zeros", "--order", "0", "--count", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2.404825557695773\n");
  EXPECT_EQ(count_lines(run({"zeros", "--order", "1", "--count", "5"}).out), 5u);
}

TEST(Cli, EvalPointExample) {
  const CliRun r = run({"eval", "--family", "bessel", "--orders", "0,0", "--point", "0,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1.0\n");
}

TEST(Cli, EvalLegendreAndScale) {
  const CliRun r = run({"eval", "--family", "legendre", "--orders", "1:1", "--point", "0.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(std::stod(r.out), -std::sqrt(0.75), 1e-15);
  const CliRun s = run({"eval", "--orders", "0", "--scale", "2", "--point", "0.5"});
  ASSERT_EQ(s.code, 0);
  EXPECT_NEAR(std::stod(s.out), bessel_j(Order(0), 1.0).value, 1e-15);
}

TEST(Cli, EvalGridCsvAndJson) {
  const CliRun r = run({"eval", "--orders", "0,1", "--n", "5", "--radius", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x_1,x_2,value");
  EXPECT_EQ(count_lines(r.out), 26u);
  const CliRun j = run({"eval", "--orders", "0", "--n", "4", "--format", "json"});
  ASSERT_EQ(j.code, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["values"].size(), 4u);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"eval", "--orders", "0,0", "--point", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--orders", "0", "--family", "nope", "--point", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--orders", "x", "--point", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--family", "legendre", "--orders", "1", "--point", "0"}).code, 2);
  EXPECT_EQ(run({"zeros", "--order", "-1"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
  const CliRun y = run({"eval", "--family", "bessel2", "--orders", "0", "--point", "0"});
  EXPECT_EQ(y.code, 2);
  EXPECT_NE(y.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"transform", "--orders", "0", "--in", temp_path("missing.csv")}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, TransformOnPlanGridMatchesPlan) {
  const NDPlan plan({Order(0)}, 32, 6.0);
  const auto& r = plan.axis(0).sample_points();
  std::vector<double> f;
  const std::string path = temp_path("profile.csv");
  {
    std::ofstream out(path);
    out << "x_1,value\n";
    for (double x : r) {
      f.push_back(std::exp(-x * x / 2));
      out << format_csv(x) << ',' << format_csv(f.back()) << '\n';
    }
  }
  const CliRun t = run({"transform", "--orders", "0", "--in", path, "--n", "32", "--radius", "6"});
  ASSERT_EQ(t.code, 0) << t.err;
  std::istringstream in(t.out);
  const SampledField spectrum = read_profile(in);
  const auto want = plan.axis(0).forward(f);
  ASSERT_EQ(spectrum.size(), want.size());
  for (std::size_t m = 0; m < want.size(); ++m) EXPECT_NEAR(spectrum[m], want[m], 1e-15);

  // And back.
  const std::string spath = temp_path("spectrum.csv");
  {
    std::ofstream out(spath);
    out << t.out;
  }
  const CliRun b = run({"transform", "--orders", "0", "--in", spath, "--n", "32", "--radius", "6", "--inverse"});
  ASSERT_EQ(b.code, 0) << b.err;
  std::istringstream bin(b.out);
  const SampledField back = read_profile(bin);
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(back[i], f[i], 1e-12);
}

TEST(Cli, TransformResamplesUniformProfile) {
  const std::string path = temp_path("uniform.csv");
  {
    std::ofstream out(path);
    for (int i = 0; i <= 1200; ++i) {
      const double x = 0.01 * i;
      out << format_csv(x) << ',' << format_csv(std::exp(-x * x / 2)) << '\n';
    }
  }
  const std::string outpath = temp_path("uniform_out.csv");
  const CliRun t = run({"transform", "--orders", "0", "--in", path, "--n", "128", "--out", outpath});
  ASSERT_EQ(t.code, 0) << t.err;
  const SampledField s = read_profile(outpath);
  for (std::size_t m = 0; m < s.size(); ++m) {
    const double k = s.grid().axis(0)[m];
    if (k > 4.0) break;
    EXPECT_NEAR(s[m], std::exp(-k * k / 2), 1e-4) << k;
  }
}

TEST(Cli, VerifySubsetReportAndDeterminism) {
  const CliRun a = run({"verify", "--suite", "eq13,theorem2,inverse", "--n", "32", "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.out;
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(doc["n"], 32);
  ASSERT_EQ(doc["checks"].size(), 3u);
  for (const auto& c : doc["checks"]) {
    EXPECT_TRUE(c["pass"].get<bool>());
    EXPECT_LE(c["max_residual"].get<double>(), c["tolerance"].get<double>());
  }
  EXPECT_EQ(run({"verify", "--suite", "eq13,theorem2,inverse", "--n", "32", "--seed", "7"}).out, a.out);
}

TEST(Cli, VerifyFailingToleranceExitsOne) {
  const CliRun r = run({"verify", "--suite", "wronskian", "--tol", "1e-300"});
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["checks"][0]["pass"].get<bool>());
  EXPECT_EQ(doc["checks"][0]["tolerance"], 1e-300);
  EXPECT_EQ(run({"verify", "--suite", "eq13", "--tol", "-1"}).code, 2);
}

TEST(Cli, VerifyLogsWhenAsked) {
  setenv("HANKEL_ND_LOG", "info", 1);
  const CliRun r = run({"verify", "--suite", "eq13"});
  unsetenv("HANKEL_ND_LOG");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("eq13: pass"), std::string::npos);
  EXPECT_TRUE(run({"verify", "--suite", "eq13"}).err.empty());
}

TEST(Cli, SolveDefaultGaussian) {
  const CliRun r = run({"solve", "--orders", "0,0", "--n", "32", "--radius", "8", "--c", "-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 32u * 32u + 1u);
  const auto pos = r.err.find("relative=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LT(std::stod(r.err.substr(pos + 9)), 1e-6);
}

TEST(Cli, SolveResonanceIsConfigError) {
  const NDPlan plan({Order(0)}, 16, 2.0);
  const double k = plan.axis(0).frequency_points()[2];
  std::ostringstream c;
  c << format_csv(k * k);
  const CliRun r = run({"solve", "--orders", "0", "--n", "16", "--radius", "2", "--c", c.str()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("resonant"), std::string::npos);
}

}  // namespace
