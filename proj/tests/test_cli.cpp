#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

using namespace h2cost;
namespace fs = std::filesystem;

namespace {

const std::string kData = std::string(H2COST_DATA_DIR) + "/reference_2020.csv";
const std::string kConfig = std::string(H2COST_CONFIG_DIR) + "/reference.json";

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args)
{
  args.insert(args.begin(), "h2cost");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::size_t count_lines(const std::string& s)
{
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class TempDir : public ::testing::Test {
protected:
  void SetUp() override
  {
    dir = fs::temp_directory_path() /
          ("h2cost_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  fs::path dir;
};

}  // namespace

TEST_F(TempDir, LcohWritesTableAndSummary)
{
  const auto path = (dir / "report.csv").string();
  const auto r = run({"lcoh", "--dataset", kData, "--config", kConfig, "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto table = slurp(path);
  EXPECT_EQ(count_lines(table), 1u + 255u);
  EXPECT_EQ(table.rfind("state,pathway,lcoh_usd_per_kg,carbon_intensity_kg_per_kg,on_frontier\n", 0), 0u);
  EXPECT_NE(table.find("\nAK,Alkaline,"), std::string::npos);

  const auto summary = slurp(dir / "report.summary.csv");
  EXPECT_NE(summary.find("dataset_vintage,2020\n"), std::string::npos);
  EXPECT_NE(summary.find("scenario,base-2020\n"), std::string::npos);
  EXPECT_NE(summary.find("dataset_sha256," + sha256_hex(slurp(kData))), std::string::npos);
}

TEST_F(TempDir, LcohIsByteIdenticalAcrossRuns)
{
  for (const std::string fmt : {"csv", "json"}) {
    const auto a = (dir / ("a." + fmt)).string(), b = (dir / ("b." + fmt)).string();
    ASSERT_EQ(run({"lcoh", "--dataset", kData, "--config", kConfig, "--format", fmt, "--out", a}).code, 0);
    ASSERT_EQ(run({"lcoh", "--dataset", kData, "--config", kConfig, "--format", fmt, "--out", b}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
  }
}

TEST(Cli, LcohJsonToStdout)
{
  const auto r = run({"lcoh", "--dataset", kData, "--config", kConfig, "--scenario", "decarb-2035",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 255u);
  EXPECT_EQ(j["metadata"]["target_year"], 2030);
  EXPECT_EQ(j["summary"]["crossover_years"].size(), 4u);
  EXPECT_EQ(j["summary"]["averages"]["SMR+CCS"]["states"], 51);
}

TEST(Cli, MissingDatasetIsInputError)
{
  const auto r = run({"lcoh", "--dataset", "/nonexistent/states.csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("/nonexistent/states.csv"), std::string::npos);
  EXPECT_EQ(r.err.rfind("h2cost: error[input]:", 0), 0u);
  EXPECT_EQ(count_lines(r.err), 1u);
}

TEST_F(TempDir, BadRowNamesFileAndLine)
{
  const auto path = dir / "bad.csv";
  std::ofstream(path) << "state,electricity_usd_per_kwh,gas_usd_per_mmbtu,grid_ci_kg_per_kwh\n"
                      << "WA,0.047,5.79,0.09\n"
                      << "ZZ,0.05,3.0,0.4\n";
  const auto r = run({"validate", "--dataset", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bad.csv"), std::string::npos);
  EXPECT_NE(r.err.find("ZZ"), std::string::npos);
}

TEST(Cli, UnknownScenarioAndUsageErrors)
{
  EXPECT_EQ(run({"lcoh", "--dataset", kData, "--scenario", "nope"}).code, 1);
  EXPECT_EQ(run({"lcoh", "--dataset", kData, "--format", "xml"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST(Cli, Version)
{
  const auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, std::string(kVersion) + "\n");
}

TEST(Cli, BreakevenFixedTarget)
{
  const auto r = run({"breakeven", "--technology", "PEM", "--target", "6.2131080323706"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PEM: 0.1000 USD/kWh"), std::string::npos);
}

TEST(Cli, BreakevenAtZeroPriceFloor)
{
  // Target equal to the zero-price LCOH gives a breakeven of exactly 0.
  const auto pem = find_technology(default_registry(), Technology::PEM);
  std::ostringstream target;
  target.precision(17);
  target << lcoh(pem, 0.0, 1.0).lcoh;
  const auto r = run({"breakeven", "--technology", "PEM", "--target", target.str()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PEM: 0.0000 USD/kWh"), std::string::npos);
}

TEST(Cli, BreakevenUnreachableIsNoSolution)
{
  const auto r = run({"breakeven", "--target", "0.5"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("no non-negative breakeven"), std::string::npos);
  EXPECT_EQ(run({"breakeven", "--target", "abc"}).code, 1);
  EXPECT_EQ(run({"breakeven", "--technology", "AEM", "--target", "3"}).code, 1);
}

TEST(Cli, BreakevenAgainstSmrCcs2050)
{
  const auto r = run({"breakeven", "--dataset", kData, "--config", kConfig, "--scenario", "2050"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dataset-average SMR+CCS"), std::string::npos);
  EXPECT_EQ(count_lines(r.out), 4u);
}

TEST(Cli, CrossoverConstantGridHasNone)
{
  const auto r = run({"crossover", "--dataset", kData, "--config", kConfig, "--constant"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("trajectory: constant"), std::string::npos);
  EXPECT_NE(r.out.find("average: vs SMR no crossover, vs SMR+CCS no crossover"), std::string::npos);
}

TEST(Cli, CrossoverLinearGrid)
{
  const auto r = run({"crossover", "--dataset", kData, "--zero-year", "2035"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("linear to zero in 2035"), std::string::npos);
  EXPECT_EQ(r.out.find("no crossover"), std::string::npos);
  EXPECT_EQ(run({"crossover", "--dataset", kData, "--zero-year", "2019"}).code, 1);
}

TEST(Cli, FrontierIncludesWashington)
{
  const auto r = run({"frontier", "--dataset", kData});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\nWA,"), std::string::npos);
  EXPECT_EQ(r.out.find("\nMA,"), std::string::npos);
  const auto j = run({"frontier", "--dataset", kData, "--format", "json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out).size() + 1, count_lines(r.out));
}

TEST(Cli, ValidateReportsCounts)
{
  const auto r = run({"validate", "--dataset", kData, "--config", kConfig});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("51 states, vintage 2020"), std::string::npos);
  EXPECT_NE(r.out.find("3 technologies, 5 scenarios"), std::string::npos);
  EXPECT_EQ(run({"validate"}).code, 1);
}

TEST(Cli, SummaryPath)
{
  EXPECT_EQ(cli::summary_path("out/report.csv"), "out/report.summary.csv");
  EXPECT_EQ(cli::summary_path("report"), "report.summary");
}
