#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "phasewave/field_io.hpp"

namespace {

namespace cli = phasewave::cli;
namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "phasewave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int status =
      cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("phasewave_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  fs::path dir;
};

TEST(ParseTime, AbsoluteAndPeriodFractions) {
  EXPECT_EQ(cli::parse_time("0", 2.0), 0.0);
  EXPECT_EQ(cli::parse_time("0.5", 2.0), 0.5);
  EXPECT_EQ(cli::parse_time("T", 2.0), 2.0);
  EXPECT_EQ(cli::parse_time("T/4", 2.0), 0.5);
  EXPECT_EQ(cli::parse_time("3T/4", 2.0), 1.5);
  EXPECT_EQ(cli::parse_time("0.5T", 2.0), 1.0);
  EXPECT_THROW(cli::parse_time("", 2.0), cli::UsageError);
  EXPECT_THROW(cli::parse_time("T/0", 2.0), cli::UsageError);
  EXPECT_THROW(cli::parse_time("Tx", 2.0), cli::UsageError);
  EXPECT_THROW(cli::parse_time("abc", 2.0), cli::UsageError);
}

TEST(ParseArgs, DefaultsAreFigureConfiguration) {
  std::ostringstream sink;
  const char* argv[] = {"phasewave", "grid"};
  const auto config = cli::parse_args(2, argv, sink);
  ASSERT_TRUE(config.has_value());
  EXPECT_EQ(config->command, cli::Command::grid);
  EXPECT_EQ(config->n, 0);
  EXPECT_EQ(config->ell, 3);
  EXPECT_EQ(config->amplitude, 2.0);
  EXPECT_EQ(config->c, 5.0);
  EXPECT_EQ(config->format, phasewave::FileFormat::csv);
}

TEST(ParseArgs, TimeListAndOverrides) {
  std::ostringstream sink;
  const char* argv[] = {"phasewave", "eval", "--t", "0,T/4,1.5", "--n", "2", "--format", "json",
                        "--tol", "1e-3"};
  const auto config = cli::parse_args(10, argv, sink);
  ASSERT_TRUE(config.has_value());
  EXPECT_EQ(config->times, (std::vector<std::string>{"0", "T/4", "1.5"}));
  EXPECT_EQ(config->n, 2);
  EXPECT_EQ(config->format, phasewave::FileFormat::json);
  ASSERT_TRUE(config->tol.has_value());
  EXPECT_EQ(*config->tol, 1e-3);
}

TEST(Run, HelpIsNotAnError) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.status, cli::kExitOk);
  EXPECT_NE(r.out.find("figures"), std::string::npos);
}

TEST(Run, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"nodes", "--ell", "0"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"grid", "--format", "xml"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"eval", "--omega", "-1"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"eval", "--n", "65"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"eval", "--t", "T/0"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"check", "--suite", "nonexistent"}).status, cli::kExitUsage);
  EXPECT_EQ(invoke({"evolve", "--dt", "1.0"}).status, cli::kExitUsage);
}

TEST(Run, NodesForEllThree) {
  const auto r = invoke({"nodes", "--ell", "3"});
  ASSERT_EQ(r.status, cli::kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "kind,k,phi,expression");
  int nodes = 0;
  int antinodes = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string kind, k_text, phi_text, expr;
    std::getline(row, kind, ',');
    std::getline(row, k_text, ',');
    std::getline(row, phi_text, ',');
    std::getline(row, expr, ',');
    const int k = std::stoi(k_text);
    const double phi = std::stod(phi_text);
    if (kind == "node") {
      EXPECT_DOUBLE_EQ(phi, kPi * k / 6);
      EXPECT_EQ(expr, "pi*" + std::to_string(k) + "/6");
      ++nodes;
    } else {
      EXPECT_EQ(kind, "antinode");
      EXPECT_DOUBLE_EQ(phi, kPi * (2 * k + 1) / 12);
      EXPECT_EQ(expr, "pi*" + std::to_string(2 * k + 1) + "/12");
      ++antinodes;
    }
  }
  EXPECT_EQ(nodes, 12);
  EXPECT_EQ(antinodes, 12);
}

TEST(Run, EvalPrintsBothFunctions) {
  const auto r = invoke({"eval", "--x", "0.1", "--p", "0", "--t", "0,T/4"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,x,p,rho,phi,W_n,W_ext");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 2u);
  // At T/4 the standing wave coincides with W_n.
  const auto last_two = [](const std::string& row) {
    const auto b = row.rfind(',');
    const auto a = row.rfind(',', b - 1);
    return std::pair{row.substr(a + 1, b - a - 1), row.substr(b + 1)};
  };
  const auto [wn, wext] = last_two(rows[1]);
  EXPECT_NEAR(std::stod(wn), std::stod(wext), 1e-15);
}

TEST(Run, CheckExitStatusReflectsReport) {
  const auto ok = invoke({"check", "--suite", "laguerre-identity"});
  EXPECT_EQ(ok.status, cli::kExitOk) << ok.out;
  EXPECT_NE(ok.out.find("[PASS] laguerre-identity"), std::string::npos);
  const auto forced = invoke({"check", "--suite", "laguerre-identity", "--tol", "1e-30"});
  EXPECT_EQ(forced.status, cli::kExitFailure);
  EXPECT_NE(forced.out.find("[FAIL] laguerre-identity"), std::string::npos);
}

TEST_F(CliFiles, CheckWritesJsonReportEvenOnFailure) {
  const auto path = dir / "report.json";
  const auto r = invoke({"check", "--suite", "nodes", "--tol", "1e-300", "--out", path.string()});
  const auto doc = nlohmann::json::parse(slurp(path));
  EXPECT_EQ(doc["suite"], "nodes");
  EXPECT_EQ(doc["passed"].get<bool>(), r.status == cli::kExitOk);
  ASSERT_EQ(doc["checks"].size(), 1u);
  EXPECT_EQ(doc["checks"][0]["id"], "nodes");
}

TEST_F(CliFiles, GridIsDeterministic) {
  const auto a = dir / "a.csv";
  const auto b = dir / "b.csv";
  ASSERT_EQ(invoke({"grid", "--n-rho", "8", "--n-phi", "16", "--t", "T/8", "--out", a.string()})
                .status,
            cli::kExitOk);
  ASSERT_EQ(invoke({"grid", "--n-rho", "8", "--n-phi", "16", "--t", "T/8", "--out", b.string()})
                .status,
            cli::kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST_F(CliFiles, GridMultipleTimesGetSuffixes) {
  const auto base = dir / "w.json";
  ASSERT_EQ(invoke({"grid", "--n-rho", "4", "--n-phi", "8", "--t", "0,T/2", "--format", "json",
                    "--out", base.string()})
                .status,
            cli::kExitOk);
  EXPECT_TRUE(fs::exists(dir / "w_t0.json"));
  EXPECT_TRUE(fs::exists(dir / "w_t1.json"));
  const auto field = phasewave::import_field(dir / "w_t1.json");
  EXPECT_NEAR(field.meta.t, kPi / 6, 1e-15);
}

TEST_F(CliFiles, FiguresWriteSixGrids) {
  const auto r = invoke({"figures", "--n-rho", "8", "--n-phi", "24", "--format", "json", "--out",
                         dir.string()});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  int count = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++count;
    const auto doc = nlohmann::json::parse(slurp(entry.path()));
    EXPECT_EQ(doc["parameters"]["ell"], 3);
    EXPECT_EQ(doc["parameters"]["A"], 2.0);
    EXPECT_EQ(doc["parameters"]["C"], 5.0);
  }
  EXPECT_EQ(count, 6);
  const auto quarter = phasewave::import_field(dir / "figure5_n5_l3_tT4.json");
  EXPECT_EQ(quarter.meta.n, 5);
  EXPECT_NEAR(quarter.meta.t, kPi / 12, 1e-15);
}

TEST_F(CliFiles, FiguresHonourOutputDirectoryVariable) {
  ::setenv(cli::kOutputDirEnv, dir.string().c_str(), 1);
  const auto r = invoke({"figures", "--n-rho", "4", "--n-phi", "8"});
  ::unsetenv(cli::kOutputDirEnv);
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir / "figure1_n0_l3_t0.csv"));
  EXPECT_TRUE(fs::exists(dir / "figure6_n5_l3_tT2.csv"));
}

TEST(Run, EvolveReportsDeviations) {
  const auto r = invoke({"evolve", "--n-rho", "8", "--n-phi", "64", "--t", "T/2,T"});
  ASSERT_EQ(r.status, cli::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,steps,max_dev_exact_rotation,max_dev_standing_wave");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 2);
}

}  // namespace
