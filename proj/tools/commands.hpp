#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leodoppler/monte_carlo.hpp"
#include "run_config.hpp"

namespace leodoppler::cli {

enum class Statistic { kSingle, kMin, kMax };
enum class FigurePreset { kFig2, kFig3, kFig4 };

std::optional<Statistic> parse_statistic(std::string_view name);
std::optional<FigurePreset> parse_preset(std::string_view name);
std::string_view preset_name(FigurePreset preset);

/// `x_hz,value` over cfg.grid_points abscissae spanning [0, x_sup].
void write_cdf_csv(std::ostream& out, const RunConfig& cfg);
void write_pdf_csv(std::ostream& out, const RunConfig& cfg);
/// CDF of a single UE's magnitude, or of the min / max over n UEs.
void write_order_stats_csv(std::ostream& out, const RunConfig& cfg, Statistic which,
                           std::size_t n);

/// Each writes into cfg.output_dir and returns the paths written. Throw
/// IoError when a file cannot be written.
std::filesystem::path cmd_cdf(const RunConfig& cfg);
std::filesystem::path cmd_pdf(const RunConfig& cfg);
std::filesystem::path cmd_order_stats(const RunConfig& cfg, Statistic which, std::size_t n);
/// report.csv and summary.txt. Throws ValidationError without a scenario.
std::vector<std::filesystem::path> cmd_simulate(const RunConfig& cfg, unsigned threads);

struct FigureCurve {
  std::string label;
  ScenarioConfig scenario;
};

/// Simulation knobs shared by every curve of a preset.
struct FigureOptions {
  std::size_t users_per_cluster = 10;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t grid_points = 512;
};

/// Preset geometries, all at a frozen instant with the cluster center on the
/// ground track:
///   fig2: h = 600 km, ρ ∈ {50, 100, 150} km, R̂_t = 2ρ
///   fig3: h = 600 km, ρ = 100 km, R̂_t ∈ {0, 100, 200, 300} km
///   fig4: h ∈ {600, 1200} km crossed with ρ ∈ {100, 200} km, R̂_t = 2ρ
std::vector<FigureCurve> figure_curves(FigurePreset preset, const FigureOptions& options);

/// Shared abscissae for a preset: grid_points values spanning
/// [0, max x_sup over the curves].
std::vector<double> figure_grid(const std::vector<FigureCurve>& curves, std::size_t grid_points);

/// `x_hz,<label>...` with every analytic CDF of the preset on the shared grid.
void write_figure_analytic_csv(std::ostream& out, const std::vector<FigureCurve>& curves,
                               std::size_t grid_points);

/// Writes <preset>_analytic.csv plus <label>_sim.csv and <label>_summary.txt
/// per curve.
std::vector<std::filesystem::path> cmd_figure(FigurePreset preset, const FigureOptions& options,
                                              const std::filesystem::path& out_dir,
                                              unsigned threads);

}  // namespace leodoppler::cli
