#include <gyqs/harness/contour.hpp>
#include <gyqs/harness/reports.hpp>
#include <gyqs/harness/simulate.hpp>
#include <gyqs/harness/verify.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace gyqs;
using namespace gyqs::harness;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    rows.push_back(f);
  }
  return rows;
}

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(GYQS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("gyqs_test_" + name)).string();
}

}  // namespace

TEST(Format, SixSignificantDigits) {
  EXPECT_EQ(fmt6(1.9), "1.9");
  EXPECT_EQ(fmt6(1.70426487), "1.70426");
  EXPECT_EQ(fmt6(123456789.0), "1.23457e+08");
  EXPECT_EQ(fmt6(INFINITY), "inf");
}

TEST(Format, ParsesLists) {
  EXPECT_EQ(parse_triple("1,2,3"), (PivotParams::Triple{1, 2, 3}));
  EXPECT_THROW(parse_triple("1,2"), std::invalid_argument);
  EXPECT_THROW(parse_triple("1,x,3"), std::invalid_argument);
  EXPECT_THROW(parse_triple("1,-1,3"), std::invalid_argument);
  EXPECT_EQ(parse_sizes("10,20"), (std::vector<long long>{10, 20}));
  EXPECT_THROW(parse_sizes("10,,20"), std::invalid_argument);
  EXPECT_THROW(parse_sizes("0"), std::invalid_argument);
}

TEST(Seeds, SplitmixScramblesTrialIndex) {
  EXPECT_NE(trial_seed(42, 0), trial_seed(42, 1));
  EXPECT_EQ(trial_seed(42, 7), splitmix64(42 ^ 7));
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

TEST(ExperimentConfig, Validation) {
  ExperimentConfig c;
  EXPECT_NO_THROW(c.validate());
  c.trials = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.sizes = {};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.cutoff = 3;  // k - 1 = 4 for t = (1,1,1)
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c = {};
  c.parallelism = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Simulate, DeterministicAndIndependentOfParallelism) {
  ExperimentConfig c;
  c.sizes = {100, 2000};
  c.trials = 1;
  const std::string a = simulation_csv(simulate(c));
  EXPECT_EQ(a, simulation_csv(simulate(c)));
  c.trials = 5;
  const std::string serial = simulation_csv(simulate(c));
  c.parallelism = 3;
  EXPECT_EQ(serial, simulation_csv(simulate(c)));
  c.seed = 43;
  EXPECT_NE(serial, simulation_csv(simulate(c)));
}

TEST(Simulate, CsvLayout) {
  ExperimentConfig c;
  c.sizes = {50, 500};
  c.trials = 2;
  c.measures = {CostMeasure::comparisons, CostMeasure::swaps};
  const std::string text = simulation_csv(simulate(c));
  EXPECT_EQ(text.find('\r'), std::string::npos);
  const auto rows = parse_csv(text);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].front(), "n");
  EXPECT_EQ(rows[0].size(), 10u);
  EXPECT_EQ(rows[0][2], "comparisons_mean");
  EXPECT_EQ(rows[1][0], "50");
  EXPECT_EQ(rows[2][1], "2");
}

TEST(Simulate, BytecodesFavorSkewedSample) {
  ExperimentConfig a, b;
  a.t = {0, 1, 2};
  b.t = {1, 1, 1};
  for (auto* c : {&a, &b}) {
    c->sizes = {100000};
    c->trials = 20;
    c->measures = {CostMeasure::bytecodes};
  }
  EXPECT_LT(simulate(a).front().measures.front().mean, simulate(b).front().measures.front().mean);
}

TEST(Reports, AnalyzeClassic) {
  const auto rows = parse_csv(analyze_csv(PivotParams({0, 0, 0}, 1)));
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"quantity", "exact", "decimal"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"entropy", "5/6", "0.833333"}));
  EXPECT_EQ(rows[5], (std::vector<std::string>{"ratio_comparisons", "19/10", "1.9"}));
  EXPECT_EQ(rows[6], (std::vector<std::string>{"ratio_swaps", "3/5", "0.6"}));
  const auto tert = parse_csv(analyze_csv(PivotParams({1, 1, 1}, 4)));
  EXPECT_NEAR(std::stod(tert[5][2]), 1.7043, 5e-5);
}

TEST(Reports, TableLayoutSampleSizeFive) {
  const auto cmp = parse_csv(table_csv(5, CostMeasure::comparisons));
  ASSERT_EQ(cmp.size(), 5u);  // header + k-1 rows
  for (const auto& r : cmp) EXPECT_EQ(r.size(), 5u);  // label + k-1 columns
  EXPECT_NEAR(std::stod(cmp[2][2]), 1.7043, 5e-5);    // t1 = 1, t2 = 1
  EXPECT_EQ(cmp[4][2], "");                           // t1 = 3, t2 = 1 is outside
  const auto swp = parse_csv(table_csv(5, CostMeasure::swaps));
  EXPECT_NEAR(std::stod(swp[1][4]), 0.3926, 5e-5);  // t1 = 0, t2 = 3
  EXPECT_THROW(table_csv(1, CostMeasure::swaps), std::invalid_argument);
}

TEST(Reports, RecurrenceCsv) {
  const PivotParams p({0, 0, 0}, 1);
  const auto rows = parse_csv(recurrence_csv(p, 12, CostMeasure::comparisons));
  ASSERT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows[1][1], "0/1");
  EXPECT_EQ(rows[2][1], "0/1");
  EXPECT_EQ(Rational::parse(rows[6][1]), brute_force_expected(5, p, CostMeasure::comparisons));
  for (std::size_t i = 2; i < rows.size(); ++i)
    EXPECT_LE(Rational::parse(rows[i - 1][1]), Rational::parse(rows[i][1]));
}

TEST(Reports, OptimizeCsv) {
  const auto d = parse_csv(discrete_optimum_csv(8, CostMeasure::comparisons));
  EXPECT_EQ(d.size(), 29u);
  EXPECT_EQ(d[1][1] + d[1][2] + d[1][3], "312");
  const auto c = parse_csv(continuous_optimum_csv({CostMeasure::swaps}));
  EXPECT_EQ(c[1][5], "true");
}

TEST(Contour, GridAndExtrema) {
  const ContourGrid g = contour_grid(CostMeasure::comparisons, 0.005);
  EXPECT_EQ(g.cells.size(), 201u * 202u / 2);
  for (const auto& c : g.cells) ASSERT_LE(c.tau1 + c.tau2, 1.0 + 1e-9);
  EXPECT_NEAR(g.center, 1.5171, 5e-5);
  EXPECT_NEAR(g.minimum.value, 1.4931, 0.002);
  EXPECT_THROW(contour_grid(CostMeasure::swaps, 0.0), std::invalid_argument);
  const std::string svg = contour_svg(contour_grid(CostMeasure::bytecodes, 0.05));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("<rect"), std::string::npos);
}

TEST(Verify, AllSuitesPass) {
  const auto r = run_verify();
  EXPECT_GE(r.size(), 10u);
  for (const auto& s : r) EXPECT_TRUE(s.passed) << s.name << ": " << s.detail;
  EXPECT_TRUE(all_passed(r));
}

TEST(Verify, CorruptedTollIsCaught) {
  const auto r = run_verify(VerifyOptions{true});
  EXPECT_FALSE(all_passed(r));
  const auto toll = std::find_if(r.begin(), r.end(), [](const SuiteResult& s) { return s.name == "cost_model.step_toll_identity"; });
  ASSERT_NE(toll, r.end());
  EXPECT_FALSE(toll->passed);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("analyze --t 0,0,0").code, 0);
  EXPECT_EQ(run_cli("analyze --t 0,0").code, 2);
  EXPECT_EQ(run_cli("analyze --t 1,1,1 --cutoff 2").code, 2);
  EXPECT_EQ(run_cli("").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("simulate --trials 0").code, 2);
  EXPECT_EQ(run_cli("table --measure widgets").code, 2);
  EXPECT_EQ(run_cli("--help").code, 0);
}

TEST(Cli, VerifyAndNegativeControl) {
  const RunResult ok = run_cli("verify");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("suites passed"), std::string::npos);
  EXPECT_EQ(run_cli("verify --inject-fault").code, 1);
}

TEST(Cli, AnalyzePrintsClassicRatio) {
  const RunResult r = run_cli("analyze --t 0,0,0");
  EXPECT_NE(r.out.find("ratio_comparisons,19/10,1.9\n"), std::string::npos) << r.out;
}

TEST(Cli, SimulateIsByteIdenticalAndWritesFile) {
  const std::string args = "simulate --t 0,0,0 --sizes 1000,5000 --trials 1 --seed 9";
  const RunResult a = run_cli(args), b = run_cli(args + " --parallel 2");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::string path = temp_path("sim.csv");
  EXPECT_EQ(run_cli(args + " --out " + path).code, 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), a.out);
  std::filesystem::remove(path);
}

TEST(Cli, ConfigFileWithCommandLineOverride) {
  const std::string cfg = temp_path("run.cfg");
  {
    std::ofstream out(cfg);
    out << "# defaults for quick runs\nt = 0,0,0\nsizes=300\ntrials=2\nseed=5\n";
  }
  const RunResult from_file = run_cli("simulate --config " + cfg);
  const RunResult explicit_flags = run_cli("simulate --t 0,0,0 --sizes 300 --trials 2 --seed 5");
  EXPECT_EQ(from_file.code, 0);
  EXPECT_EQ(from_file.out, explicit_flags.out);
  const RunResult overridden = run_cli("simulate --config " + cfg + " --trials 3");
  EXPECT_NE(overridden.out.find("\n300,3,"), std::string::npos) << overridden.out;
  {
    std::ofstream out(cfg);
    out << "bogus-key=1\n";
  }
  EXPECT_EQ(run_cli("simulate --config " + cfg).code, 2);
  EXPECT_EQ(run_cli("simulate --config /nonexistent/file.cfg").code, 2);
  std::filesystem::remove(cfg);
}

TEST(Cli, ContourWritesCsvAndSvg) {
  const std::string csv = temp_path("contour.csv"), svg = temp_path("contour.svg");
  const RunResult r = run_cli("contour --measure comparisons --grid-step 0.05 --out " + csv + " --svg " + svg);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("center"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(csv));
  EXPECT_TRUE(std::filesystem::exists(svg));
  std::filesystem::remove(csv);
  std::filesystem::remove(svg);
}

TEST(Cli, RecurrenceAndOptimize) {
  const RunResult r = run_cli("recurrence --t 0,0,0 --cutoff 1 --nmax 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_csv(r.out).size(), 7u);
  const RunResult o = run_cli("optimize --mode discrete --k 5 --measure swaps");
  EXPECT_NE(o.out.find("1,0,3,0,"), std::string::npos) << o.out;
  EXPECT_EQ(run_cli("optimize --mode sideways").code, 2);
}
