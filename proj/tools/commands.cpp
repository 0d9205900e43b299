#include "commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>

#include "leodoppler/analytic_distributions.hpp"
#include "leodoppler/csv.hpp"
#include "leodoppler/errors.hpp"

namespace leodoppler::cli {

namespace fs = std::filesystem;

namespace {

void write_curve(std::ostream& out, const RunConfig& cfg,
                 const std::function<double(double)>& value) {
  const DopplerMagnitudeDistribution d = cfg.distribution();
  const double x_sup = d.support_max();
  const auto last = static_cast<double>(cfg.grid_points - 1);
  out << "x_hz,value\n";
  for (std::size_t k = 0; k < cfg.grid_points; ++k) {
    const double x = k + 1 == cfg.grid_points ? x_sup : x_sup * static_cast<double>(k) / last;
    write_csv_row(out, {x, value(x)});
  }
}

template <class Writer>
fs::path write_file(const fs::path& dir, const std::string& name, Writer&& writer) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  const fs::path path = dir / name;
  // Binary mode keeps '\n' line endings on every platform.
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
  return path;
}

std::string km_label(double meters) { return format_number(meters / 1e3) + "km"; }

ScenarioConfig make_scenario(const SatelliteConfig& sat, double rho, double offset,
                             const FigureOptions& options) {
  ScenarioConfig s;
  s.satellite = sat;
  s.cluster_radius_m = rho;
  s.center_offset_m = offset;
  s.users_per_cluster = options.users_per_cluster;
  s.trials = options.trials;
  s.seed = options.seed;
  s.cluster_center_on_track = true;
  s.grid_points = options.grid_points;
  return s;
}

}  // namespace

std::optional<Statistic> parse_statistic(std::string_view name) {
  if (name == "single") return Statistic::kSingle;
  if (name == "min") return Statistic::kMin;
  if (name == "max") return Statistic::kMax;
  return std::nullopt;
}

std::optional<FigurePreset> parse_preset(std::string_view name) {
  if (name == "fig2") return FigurePreset::kFig2;
  if (name == "fig3") return FigurePreset::kFig3;
  if (name == "fig4") return FigurePreset::kFig4;
  return std::nullopt;
}

std::string_view preset_name(FigurePreset preset) {
  switch (preset) {
    case FigurePreset::kFig2: return "fig2";
    case FigurePreset::kFig3: return "fig3";
    case FigurePreset::kFig4: return "fig4";
  }
  return "";
}

void write_cdf_csv(std::ostream& out, const RunConfig& cfg) {
  const DopplerMagnitudeDistribution d = cfg.distribution();
  write_curve(out, cfg, [&](double x) { return d.cdf(x); });
}

void write_pdf_csv(std::ostream& out, const RunConfig& cfg) {
  const DopplerMagnitudeDistribution d = cfg.distribution();
  write_curve(out, cfg, [&](double x) { return d.pdf(x); });
}

void write_order_stats_csv(std::ostream& out, const RunConfig& cfg, Statistic which,
                           std::size_t n) {
  if (n < 1) throw ValidationError("order statistics need N >= 1");
  const DopplerMagnitudeDistribution d = cfg.distribution();
  switch (which) {
    case Statistic::kSingle:
      write_curve(out, cfg, [&](double x) { return d.cdf(x); });
      break;
    case Statistic::kMin:
      write_curve(out, cfg, [&](double x) { return min_doppler_cdf(x, d, n); });
      break;
    case Statistic::kMax:
      write_curve(out, cfg, [&](double x) { return max_doppler_cdf(x, d, n); });
      break;
  }
}

fs::path cmd_cdf(const RunConfig& cfg) {
  cfg.validate();
  return write_file(cfg.output_dir, "cdf.csv", [&](std::ostream& o) { write_cdf_csv(o, cfg); });
}

fs::path cmd_pdf(const RunConfig& cfg) {
  cfg.validate();
  return write_file(cfg.output_dir, "pdf.csv", [&](std::ostream& o) { write_pdf_csv(o, cfg); });
}

fs::path cmd_order_stats(const RunConfig& cfg, Statistic which, std::size_t n) {
  cfg.validate();
  const char* name = which == Statistic::kSingle ? "order_stats_single.csv"
                     : which == Statistic::kMin  ? "order_stats_min.csv"
                                                 : "order_stats_max.csv";
  return write_file(cfg.output_dir, name,
                    [&](std::ostream& o) { write_order_stats_csv(o, cfg, which, n); });
}

std::vector<fs::path> cmd_simulate(const RunConfig& cfg, unsigned threads) {
  cfg.validate();
  const auto scenario = cfg.scenario();
  if (!scenario) throw ValidationError("simulate needs a scenario: set 'trials' in the config");
  const ComparisonReport report = run_scenario(*scenario, threads);
  return {
      write_file(cfg.output_dir, "report.csv",
                 [&](std::ostream& o) { write_report_csv(o, report); }),
      write_file(cfg.output_dir, "summary.txt",
                 [&](std::ostream& o) { write_summary(o, report); }),
  };
}

std::vector<FigureCurve> figure_curves(FigurePreset preset, const FigureOptions& options) {
  std::vector<FigureCurve> curves;
  const std::string prefix(preset_name(preset));
  switch (preset) {
    case FigurePreset::kFig2:
      for (double rho : {50e3, 100e3, 150e3}) {
        curves.push_back({prefix + "_rho" + km_label(rho),
                          make_scenario(leo_600km(), rho, 2.0 * rho, options)});
      }
      break;
    case FigurePreset::kFig3:
      for (double offset : {0.0, 100e3, 200e3, 300e3}) {
        curves.push_back({prefix + "_rhat" + km_label(offset),
                          make_scenario(leo_600km(), 100e3, offset, options)});
      }
      break;
    case FigurePreset::kFig4:
      for (const SatelliteConfig& sat : {leo_600km(), leo_1200km()}) {
        for (double rho : {100e3, 200e3}) {
          curves.push_back({prefix + "_h" + km_label(sat.altitude_m) + "_rho" + km_label(rho),
                            make_scenario(sat, rho, 2.0 * rho, options)});
        }
      }
      break;
  }
  return curves;
}

std::vector<double> figure_grid(const std::vector<FigureCurve>& curves,
                                std::size_t grid_points) {
  if (grid_points < 2) throw ValidationError("grid_points must be >= 2");
  double x_max = 0.0;
  for (const auto& c : curves) x_max = std::max(x_max, c.scenario.analytic().support_max());
  std::vector<double> grid(grid_points);
  for (std::size_t k = 0; k < grid_points; ++k) {
    grid[k] = x_max * static_cast<double>(k) / static_cast<double>(grid_points - 1);
  }
  grid.back() = x_max;
  return grid;
}

void write_figure_analytic_csv(std::ostream& out, const std::vector<FigureCurve>& curves,
                               std::size_t grid_points) {
  std::vector<DopplerMagnitudeDistribution> laws;
  out << "x_hz";
  for (const auto& c : curves) {
    out << ',' << c.label;
    laws.push_back(c.scenario.analytic());
  }
  out << '\n';
  for (double x : figure_grid(curves, grid_points)) {
    out << format_number(x);
    for (const auto& d : laws) out << ',' << format_number(d.cdf(x));
    out << '\n';
  }
}

std::vector<fs::path> cmd_figure(FigurePreset preset, const FigureOptions& options,
                                 const fs::path& out_dir, unsigned threads) {
  const auto curves = figure_curves(preset, options);
  std::vector<fs::path> written;
  written.push_back(write_file(out_dir, std::string(preset_name(preset)) + "_analytic.csv",
                               [&](std::ostream& o) {
                                 write_figure_analytic_csv(o, curves, options.grid_points);
                               }));
  for (const auto& c : curves) {
    const ComparisonReport report = run_scenario(c.scenario, threads);
    written.push_back(write_file(out_dir, c.label + "_sim.csv",
                                 [&](std::ostream& o) { write_report_csv(o, report); }));
    written.push_back(write_file(out_dir, c.label + "_summary.txt",
                                 [&](std::ostream& o) { write_summary(o, report); }));
  }
  return written;
}

}  // namespace leodoppler::cli
