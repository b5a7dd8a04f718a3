#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/commands.hpp"
#include "cli/config.hpp"

namespace fs = std::filesystem;
using namespace wigflow::cli;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wigflow_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run_args(std::vector<std::string> args, bool with_out = true) {
    args.insert(args.begin(), "wigflow");
    if (with_out) {
      args.push_back("--out");
      args.push_back(dir_.string());
    }
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
  }

  std::vector<std::vector<double>> read_csv(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::string line;
    std::getline(in, line);  // header
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
      std::vector<double> row;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
      rows.push_back(std::move(row));
    }
    return rows;
  }

  std::string read_file(const fs::path& p) const {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  nlohmann::json manifest() const { return nlohmann::json::parse(read_file(dir_ / "manifest.json")); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run_args({"figure", "7"}), kExitUsage);
  EXPECT_EQ(run_args({"verify", "bogus"}), kExitUsage);
  EXPECT_EQ(run_args({"sweep", "width", "--t-range=0,1,1"}), kExitUsage);
  EXPECT_EQ(run_args({"sweep", "width", "--t-range=1,0,5"}), kExitUsage);
  EXPECT_EQ(run_args({"sweep", "width", "--params", "sigma_q=abc", "--t-range=0,1,5"}), kExitUsage);
  EXPECT_EQ(run_args({"sweep", "width", "--params", "colour=1", "--t-range=0,1,5"}), kExitUsage);
  EXPECT_EQ(run_args({"sweep", "energy", "--t-range=0,1,5"}), kExitUsage);
  EXPECT_EQ(run_args({"--grid-n", "100", "figure", "3"}), kExitUsage);
  EXPECT_EQ(run_args({}), kExitUsage);
}

TEST_F(CliTest, HelpAndVersionExitZero) {
  EXPECT_EQ(run_args({"--help"}, false), kExitOk);
  EXPECT_EQ(run_args({"--version"}, false), kExitOk);
}

TEST_F(CliTest, UnwritableOutputExitsThree) {
  EXPECT_EQ(run_args({"figure", "3", "--out", "/proc/wigflow_denied"}, false), kExitIo);
}

TEST_F(CliTest, FigureThreeWidthTable) {
  ASSERT_EQ(run_args({"figure", "3"}), kExitOk);
  const auto rows = read_csv("width.csv");
  ASSERT_EQ(rows.size(), 81u);
  for (const auto& r : rows) {
    ASSERT_EQ(r.size(), 5u);
    EXPECT_NEAR(r[2] / r[1], 1.0, 1e-6);
  }
  EXPECT_NEAR(rows[40][0], 0.0, 1e-12);
  EXPECT_NEAR(rows[40][1], 1.0, 1e-12);
  const auto m = manifest();
  EXPECT_EQ(m["command"], "figure 3");
  EXPECT_EQ(m["grid"]["n"], 512);
  EXPECT_EQ(m["version"], kVersion);
  EXPECT_EQ(m["files"][0], "width.csv");
}

TEST_F(CliTest, FigureFiveClosedFormMarginal) {
  ASSERT_EQ(run_args({"figure", "5"}), kExitOk);
  const auto rows = read_csv("p_marginal.csv");
  bool found = false;
  for (const auto& r : rows) {
    if (std::abs(r[0]) < 1e-12) {
      found = true;
      EXPECT_NEAR(r[2], 0.20690, 1e-5);
      EXPECT_NEAR(r[1], r[2], 1e-3);
    }
  }
  EXPECT_TRUE(found);
  EXPECT_LT(manifest()["parameters"]["min_W"].get<double>(), 0.0);
}

TEST_F(CliTest, FigureOutputIsByteIdentical) {
  ASSERT_EQ(run_args({"figure", "5"}), kExitOk);
  const auto first = read_file(dir_ / "wigner.csv");
  const auto first_manifest = read_file(dir_ / "manifest.json");
  ASSERT_EQ(run_args({"figure", "5"}), kExitOk);
  EXPECT_EQ(first, read_file(dir_ / "wigner.csv"));
  EXPECT_EQ(first_manifest, read_file(dir_ / "manifest.json"));
}

TEST_F(CliTest, PngFramesOnRequest) {
  ASSERT_EQ(run_args({"--png", "figure", "1"}), kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "frame_000.png"));
  EXPECT_TRUE(fs::exists(dir_ / "frames.json"));
}

TEST_F(CliTest, SweepWidthMatchesLaw) {
  ASSERT_EQ(run_args({"sweep", "width", "--params", "sigma_q=0.8,p0=0.5", "--t-range=-4,4,41"}), kExitOk);
  const auto rows = read_csv("sweep_width.csv");
  ASSERT_EQ(rows.size(), 41u);
  for (const auto& r : rows) EXPECT_LT(std::abs(r[3]), 1e-3);
}

TEST_F(CliTest, SweepHermiteWidthUsesHalfIqr) {
  ASSERT_EQ(run_args({"sweep", "width", "--params", "hermite=2", "--t-range=0,4,5"}), kExitOk);
  EXPECT_EQ(manifest()["parameters"]["measure"], "half_iqr");
  for (const auto& r : read_csv("sweep_width.csv")) EXPECT_LT(std::abs(r[3]), 1e-2);
}

TEST_F(CliTest, SweepProbRightFindsExtremum) {
  ASSERT_EQ(run_args({"sweep", "prob_right", "--t-range=-10,10,101"}), kExitOk);
  const auto m = manifest();
  EXPECT_NEAR(m["parameters"]["t_extremum"].get<double>(), -4.0, 1e-12);
  EXPECT_NEAR(m["parameters"]["t_argmin"].get<double>(), -4.0, 0.05);
}

TEST_F(CliTest, OutputDirectoryFromEnvironment) {
  ::setenv(kOutDirEnv, dir_.c_str(), 1);
  const int code = run_args({"figure", "3"}, false);
  ::unsetenv(kOutDirEnv);
  ASSERT_EQ(code, kExitOk);
  EXPECT_TRUE(fs::exists(dir_ / "width.csv"));
}

TEST_F(CliTest, VerifyWignerCoarseGrid) {
  ASSERT_EQ(run_args({"--grid-n", "256", "verify", "wigner"}), kExitOk);
  const auto report = nlohmann::json::parse(read_file(dir_ / "verify_wigner.json"));
  EXPECT_EQ(report["failed"], 0);
  EXPECT_GT(report["passed"].get<int>(), 0);
  EXPECT_DOUBLE_EQ(report["tolerance_scale"].get<double>(), 4.0);
}

TEST(RunConfig, Validation) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.grid_n = 64;
  EXPECT_THROW(cfg.validate(), UsageError);
  cfg.grid_n = 384;
  EXPECT_THROW(cfg.validate(), UsageError);
  cfg.grid_n = 128;
  EXPECT_DOUBLE_EQ(cfg.tolerance_scale(), 16.0);
}
