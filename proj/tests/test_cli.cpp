#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "leodoppler/errors.hpp"
#include "run_config.hpp"

namespace fs = std::filesystem;

namespace leodoppler::cli {
namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ConfigError for:\n" << text;
  return 0;
}

std::vector<std::pair<double, double>> read_xy(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x_hz,value");
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    rows.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
  }
  return rows;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("leodoppler_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

TEST(ParseConfig, DefaultsFor600km) {
  const RunConfig c = parse("h_km = 600\n");
  EXPECT_EQ(c.satellite, leo_600km());
  EXPECT_EQ(c.cluster_radius_m, 100e3);
  EXPECT_EQ(c.center_offset_m, 0.0);
  EXPECT_EQ(c.users_per_cluster, 1u);
  EXPECT_FALSE(c.trials);
  EXPECT_FALSE(c.scenario());
  EXPECT_EQ(parse("h_km = 1200 km\n").satellite, leo_1200km());
}

TEST(ParseConfig, FullFileWithUnitsAndComments) {
  const RunConfig c = parse(
      "# scenario\n"
      "fc_ghz = 2.5 GHz\n"
      "h_km = 800\n"
      "omega_s_rad_s = 0.00105 rad/s   # custom\n"
      "\n"
      "rho_km = 50 km\n"
      "r_hat_km = 120\n"
      "n_users = 4\n"
      "trials = 200\n"
      "seed = 42\n"
      "grid_points = 64\n");
  EXPECT_EQ(c.satellite.carrier_hz, 2.5e9);
  EXPECT_EQ(c.satellite.altitude_m, 800e3);
  EXPECT_EQ(c.satellite.omega_s, 0.00105);
  EXPECT_EQ(c.cluster_radius_m, 50e3);
  EXPECT_EQ(c.center_offset_m, 120e3);
  ASSERT_TRUE(c.scenario());
  EXPECT_EQ(c.scenario()->trials, 200u);
  EXPECT_EQ(c.scenario()->seed, 42u);
  EXPECT_EQ(c.scenario()->users_per_cluster, 4u);
}

TEST(ParseConfig, SyntaxErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("h_km = 600\nbogus = 1\n"), 2u);
  EXPECT_EQ(error_line("h_km = 600\n\nh_km = 600\n"), 3u);
  EXPECT_EQ(error_line("h_km = 600 m\n"), 1u);
  EXPECT_EQ(error_line("h_km = 600\nrho_km = abc\n"), 2u);
  EXPECT_EQ(error_line("h_km 600\n"), 1u);
  EXPECT_EQ(error_line("h_km = 600\nn_users = 2.5\n"), 2u);
}

TEST(ParseConfig, InvariantViolationsAreValidationErrors) {
  EXPECT_THROW(parse(""), ValidationError);
  try {
    parse("h_km = -1\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("h_km"), std::string::npos);
  }
  EXPECT_THROW(parse("h_km = 700\n"), ValidationError);  // no default omega_s
  EXPECT_THROW(parse("h_km = 600\nrho_km = 0\n"), ValidationError);
  EXPECT_THROW(parse("h_km = 600\nr_hat_km = -5\n"), ValidationError);
  EXPECT_THROW(parse("h_km = 600\nn_users = 0\n"), ValidationError);
  EXPECT_THROW(parse("h_km = 600\ntrials = 0\n"), ValidationError);
}

TEST(ParseConfig, MissingFileIsIoError) {
  EXPECT_THROW(parse_config_file("/nonexistent/leodoppler.cfg"), IoError);
}

TEST(Names, RoundTrip) {
  for (auto p : {FigurePreset::kFig2, FigurePreset::kFig3, FigurePreset::kFig4}) {
    EXPECT_EQ(parse_preset(preset_name(p)), p);
  }
  EXPECT_FALSE(parse_preset("fig9"));
  EXPECT_EQ(parse_statistic("min"), Statistic::kMin);
  EXPECT_FALSE(parse_statistic("median"));
}

TEST(Writers, CdfEndsAtOneAndMatchesKnownValue) {
  RunConfig c = parse("h_km = 600\nrho_km = 100\nr_hat_km = 0\ngrid_points = 101\n");
  std::ostringstream out;
  write_cdf_csv(out, c);
  const auto rows = read_xy(out.str());
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows.front().first, 0.0);
  EXPECT_EQ(rows.back().second, 1.0);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i].second, rows[i - 1].second);
  EXPECT_NEAR(c.distribution().cdf(5000.0), 0.305, 5e-4);
}

TEST(Writers, SingleOrderStatisticIsTheCdf) {
  RunConfig c = parse("h_km = 600\nrho_km = 80\nr_hat_km = 30\ngrid_points = 33\n");
  std::ostringstream a, b;
  write_cdf_csv(a, c);
  write_order_stats_csv(b, c, Statistic::kSingle, 7);
  EXPECT_EQ(a.str(), b.str());
  std::ostringstream lo, hi;
  write_order_stats_csv(lo, c, Statistic::kMin, 1);
  write_order_stats_csv(hi, c, Statistic::kMax, 1);
  EXPECT_EQ(lo.str(), a.str());
  EXPECT_EQ(hi.str(), a.str());
}

TEST(Writers, MinAboveSingleAboveMax) {
  RunConfig c = parse("h_km = 600\nrho_km = 100\nr_hat_km = 100\ngrid_points = 65\n");
  std::ostringstream s, lo, hi;
  write_cdf_csv(s, c);
  write_order_stats_csv(lo, c, Statistic::kMin, 5);
  write_order_stats_csv(hi, c, Statistic::kMax, 5);
  const auto single = read_xy(s.str()), mn = read_xy(lo.str()), mx = read_xy(hi.str());
  for (std::size_t i = 0; i < single.size(); ++i) {
    EXPECT_GE(mn[i].second, single[i].second);
    EXPECT_LE(mx[i].second, single[i].second);
  }
}

TEST(Writers, PdfIsNonNegative) {
  RunConfig c = parse("h_km = 1200\nrho_km = 150\nr_hat_km = 200\n");
  std::ostringstream out;
  write_pdf_csv(out, c);
  for (const auto& [x, v] : read_xy(out.str())) EXPECT_GE(v, 0.0) << x;
}

TEST(Commands, FilesAndDeterministicSimulation) {
  TempDir dir;
  RunConfig c = parse("h_km = 600\nrho_km = 60\nr_hat_km = 120\nn_users = 3\ntrials = 500\n");
  c.output_dir = dir.path();
  EXPECT_EQ(cmd_cdf(c).filename(), "cdf.csv");
  EXPECT_EQ(cmd_pdf(c).filename(), "pdf.csv");
  EXPECT_EQ(cmd_order_stats(c, Statistic::kMax, 4).filename(), "order_stats_max.csv");
  const auto first = cmd_simulate(c, 1);
  ASSERT_EQ(first.size(), 2u);
  const std::string report = slurp(first[0]), summary = slurp(first[1]);
  cmd_simulate(c, 3);
  EXPECT_EQ(slurp(first[0]), report);
  EXPECT_EQ(slurp(first[1]), summary);
  EXPECT_NE(summary.find("violations=0\n"), std::string::npos);

  RunConfig no_trials = parse("h_km = 600\n");
  no_trials.output_dir = dir.path();
  EXPECT_THROW(cmd_simulate(no_trials, 1), ValidationError);
  no_trials.output_dir = dir.path() / "cdf.csv" / "sub";
  EXPECT_THROW(cmd_cdf(no_trials), IoError);
}

std::vector<std::vector<double>> figure_columns(FigurePreset p) {
  FigureOptions o;
  o.grid_points = 128;
  const auto curves = figure_curves(p, o);
  std::ostringstream out;
  write_figure_analytic_csv(out, curves, o.grid_points);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> cols(curves.size());
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    for (auto& col : cols) {
      std::getline(row, cell, ',');
      col.push_back(std::stod(cell));
    }
  }
  return cols;
}

void expect_dominates(const std::vector<double>& upper, const std::vector<double>& lower) {
  for (std::size_t i = 0; i < upper.size(); ++i) EXPECT_GE(upper[i], lower[i]) << i;
}

TEST(Figures, Labels) {
  const auto curves = figure_curves(FigurePreset::kFig4, {});
  ASSERT_EQ(curves.size(), 4u);
  EXPECT_EQ(curves[0].label, "fig4_h600km_rho100km");
  EXPECT_EQ(curves[3].label, "fig4_h1200km_rho200km");
  EXPECT_EQ(figure_curves(FigurePreset::kFig2, {}).size(), 3u);
  EXPECT_EQ(figure_curves(FigurePreset::kFig3, {}).size(), 4u);
}

TEST(Figures, SmallerClusterDominates) {
  const auto c = figure_columns(FigurePreset::kFig2);  // rho 50, 100, 150
  expect_dominates(c[0], c[1]);
  expect_dominates(c[1], c[2]);
}

TEST(Figures, CloserClusterDominates) {
  const auto c = figure_columns(FigurePreset::kFig3);  // r_hat 0, 100, 200, 300
  for (std::size_t k = 0; k + 1 < c.size(); ++k) expect_dominates(c[k], c[k + 1]);
}

TEST(Figures, HigherOrbitDominates) {
  const auto c = figure_columns(FigurePreset::kFig4);
  expect_dominates(c[2], c[0]);
  expect_dominates(c[3], c[1]);
  expect_dominates(c[3], c[0]);
}

#ifdef LEODOPPLER_CLI_PATH
int run_cli(const std::string& args) {
  const std::string cmd = std::string(LEODOPPLER_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Executable, ExitCodes) {
  TempDir dir;
  const auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir.path() / name) << text;
    return (dir.path() / name).string();
  };
  const std::string good = write("good.cfg", "h_km = 600\nrho_km = 50\n");
  const std::string out = (dir.path() / "out").string();
  fs::create_directories(out);
  EXPECT_EQ(run_cli("cdf --config " + good + " --out " + out), 0);
  EXPECT_TRUE(fs::exists(fs::path(out) / "cdf.csv"));
  EXPECT_EQ(run_cli("order-stats --config " + good + " --which min --n 3 --out " + out), 0);
  EXPECT_EQ(run_cli("cdf --config " + write("bad.cfg", "nope = 1\n") + " --out " + out), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
  EXPECT_EQ(run_cli("figure --out " + out), 2);
  EXPECT_EQ(run_cli("cdf --config " + write("neg.cfg", "h_km = -1\n") + " --out " + out), 3);
  EXPECT_EQ(run_cli("simulate --config " + good + " --out " + out), 3);
  EXPECT_EQ(run_cli("cdf --config " + (dir.path() / "missing.cfg").string()), 4);
  EXPECT_EQ(run_cli("cdf --config " + good + " --out " + good + "/x"), 4);
}
#endif

}  // namespace
}  // namespace leodoppler::cli
