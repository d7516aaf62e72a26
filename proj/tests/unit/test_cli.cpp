#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pancake/angenent_oval.hpp"
#include "pancake/solver.hpp"
#include "pancake_cli/commands.hpp"
#include "pancake_cli/config.hpp"
#include "pancake_cli/serialize.hpp"

using namespace pancake;
using namespace pancake::cli;
namespace fs = std::filesystem;

namespace {

int exit_code(const std::vector<std::string>& args) {
  try {
    parse_config(args);
    return 0;
  } catch (const CliExit& e) {
    return e.code();
  }
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "pancake_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

SolverConfig small_config() {
  SolverConfig c;
  c.grid_size = 64;
  return c;
}

const RunRecord& small_record() {
  static const RunRecord r = run_approximant(2, 3.0, small_config());
  return r;
}

std::vector<std::vector<double>> csv_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(ParseConfig, Defaults) {
  const CliConfig c = parse_config({"run", "--n", "2", "--R", "10"});
  EXPECT_EQ(c.command, Command::run);
  EXPECT_EQ(c.n, 2);
  EXPECT_EQ(c.R, 10.0);
  EXPECT_EQ(c.solver.grid_size, 512u);
  EXPECT_EQ(c.solver.safety, 0.25);
  EXPECT_TRUE(std::isnan(c.solver.snapshot_stride));
  EXPECT_EQ(c.delta, kDefaultEdgeDelta);
}

TEST(ParseConfig, FlagsBeforeOrAfterSubcommand) {
  EXPECT_EQ(parse_config({"--N", "256", "verify"}).solver.grid_size, 256u);
  EXPECT_EQ(parse_config({"verify", "--N", "256"}).solver.grid_size, 256u);
  EXPECT_EQ(parse_config({"fit"}).command, Command::fit);
  EXPECT_EQ(parse_config({"benchmark", "--r0", "2"}).radius, 2.0);
}

TEST(ParseConfig, Rejections) {
  EXPECT_NE(exit_code({"run", "--N", "102"}), 0);
  EXPECT_NE(exit_code({"run", "--N", "12"}), 0);
  EXPECT_EQ(exit_code({"run", "--N", "100"}), 0);
  EXPECT_NE(exit_code({"run", "--safety", "0.9"}), 0);
  EXPECT_NE(exit_code({"run", "--R", "-1"}), 0);
  EXPECT_NE(exit_code({"run", "--bogus", "1"}), 0);
  EXPECT_NE(exit_code({}), 0);
  EXPECT_NE(exit_code({"run", "oval"}), 0);
  EXPECT_EQ(exit_code({"--help"}), 0);
}

TEST(ParseConfig, FlagsOverrideFile) {
  const fs::path file = scratch("cfg.ini");
  std::ofstream(file) << "R=20\nN=256\n";
  const CliConfig from_file = parse_config({"--config", file.string(), "run"});
  EXPECT_EQ(from_file.R, 20.0);
  EXPECT_EQ(from_file.solver.grid_size, 256u);
  const CliConfig both = parse_config({"--config", file.string(), "run", "--R", "40"});
  EXPECT_EQ(both.R, 40.0);
  EXPECT_EQ(both.solver.grid_size, 256u);
}

TEST(ResolveOutput, EnvironmentDirectory) {
  unsetenv(kOutputDirEnv);
  EXPECT_TRUE(resolve_output("", "a.csv").empty());
  EXPECT_EQ(resolve_output("x/b.csv", "a.csv"), fs::path("x/b.csv"));
  setenv(kOutputDirEnv, "/tmp/out", 1);
  EXPECT_EQ(resolve_output("", "a.csv"), fs::path("/tmp/out/a.csv"));
  EXPECT_EQ(resolve_output("b.csv", "a.csv"), fs::path("/tmp/out/b.csv"));
  EXPECT_EQ(resolve_output("/abs/b.csv", "a.csv"), fs::path("/abs/b.csv"));
  EXPECT_TRUE(resolve_output("-", "a.csv").empty());
  unsetenv(kOutputDirEnv);
}

TEST(Timeseries, HeaderIsFixed) {
  std::ostringstream out;
  write_timeseries(small_record(), out);
  const std::string text = out.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "t,h,l,A,Hmin,Hmax,kmin,lambdamax,area_residual,edge_gap,g");
  EXPECT_EQ(csv_rows(text).size(), small_record().snapshots.size());
}

TEST(Timeseries, SphereAreaDecreases) {
  RunRecord r = evolve({round_profile(1.0, 64, 2), 0.0, 0}, small_config());
  r.extinction_time = estimate_extinction(r);
  std::ostringstream out;
  write_timeseries(r, out);
  const auto rows = csv_rows(out.str());
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i][3], rows[i - 1][3]);
}

TEST(Timeseries, CurveShorteningTailIsLogTwo) {
  // For the oval, l + t = log(1 + sqrt(1 - e^{2t})) -> log 2.
  SolverConfig c;
  c.grid_size = 256;
  const RunRecord r = run_approximant(1, 6.0, c);
  std::ostringstream out;
  write_timeseries(r, out);
  const auto rows = csv_rows(out.str());
  for (const auto& row : rows) {
    if (row[0] < -4.0) EXPECT_NEAR(row[10], std::log(2.0), 5e-3) << row[0];
  }
}

TEST(Timeseries, Deterministic) {
  std::ostringstream a, b;
  write_timeseries(run_approximant(2, 2.0, small_config()), a);
  write_timeseries(run_approximant(2, 2.0, small_config()), b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Record, RoundTripKeepsVerdicts) {
  const RunRecord& r = small_record();
  const std::string text = record_json(r);
  const RunRecord back = record_from_json(text);
  EXPECT_EQ(record_json(back), text);
  const BoundReport a = check_inequalities(r), b = check_inequalities(back);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    EXPECT_EQ(a.entries[i].id, b.entries[i].id);
    EXPECT_EQ(a.entries[i].pass, b.entries[i].pass);
    if (!std::isnan(a.entries[i].margin)) EXPECT_EQ(a.entries[i].margin, b.entries[i].margin);
  }
  EXPECT_EQ(fit_displacement_constant(r).C_est, fit_displacement_constant(back).C_est);
  EXPECT_THROW(record_from_json("{}"), std::runtime_error);
  EXPECT_THROW(load_record(scratch("missing.json").string()), std::runtime_error);
}

TEST(Report, SummaryAndVacuousBounds) {
  SolverConfig c = small_config();
  const RunRecord r = run_approximant(1, 3.0, c);
  const BoundReport b = check_inequalities(r);
  const auto j = nlohmann::json::parse(report_json(r, b, {}));
  EXPECT_EQ(j["summary"]["passed"], b.passed());
  EXPECT_EQ(j["summary"]["failed"], b.failed());
  EXPECT_EQ(j["run"]["n"], 1);
  EXPECT_EQ(j["bounds"].size(), b.entries.size());
  bool seen = false;
  for (const auto& e : j["bounds"]) {
    if (e["id"] == "kappa_ge_lambda") {
      EXPECT_TRUE(e["vacuous"].get<bool>());
      seen = true;
    }
    EXPECT_TRUE(e.contains("margin") && e.contains("worst_t") && e.contains("pass"));
  }
  EXPECT_TRUE(seen);
  EXPECT_TRUE(j["fits"]["C_est"].is_null());
}

TEST(Execute, VerifyExitCodeFollowsVerdicts) {
  const fs::path rec = scratch("record.json"), report = scratch("report.json");
  save_record(small_record(), rec.string());
  CliConfig cfg = parse_config({"verify", "--input", rec.string(), "--out", report.string()});
  std::ostringstream out, err;
  const int code = execute(cfg, out, err);
  EXPECT_EQ(code, check_inequalities(small_record()).all_pass() ? 0 : 1);
  const auto j = nlohmann::json::parse(read_file(report.string()));
  EXPECT_EQ(j["summary"]["failed"], check_inequalities(small_record()).failed());
}

TEST(Execute, OvalCsv) {
  CliConfig cfg = parse_config({"oval", "--t", "-3", "--N", "32", "--out", "-"});
  std::ostringstream out, err;
  ASSERT_EQ(execute(cfg, out, err), 0);
  const auto rows = csv_rows(out.str());
  ASSERT_EQ(rows.size(), 32u);
  for (const auto& row : rows) {
    EXPECT_NEAR(row[1], oval_curvature(row[0], -3.0), 1e-13);
    EXPECT_LT(std::abs(row[4]), 1e-10);
  }
}

TEST(Execute, ErrorsBecomeExitCodes) {
  CliConfig cfg = parse_config({"fit", "--N", "64", "--R", "3"});
  cfg.input = scratch("missing.json").string();
  std::ostringstream out, err;
  EXPECT_NE(execute(cfg, out, err), 0);
  EXPECT_NE(err.str().find("missing.json"), std::string::npos);
}
