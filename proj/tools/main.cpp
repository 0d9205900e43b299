// leodoppler: Doppler magnitude distributions for clustered LEO users.
//
//   leodoppler cdf|pdf|order-stats|simulate|figure [--config PATH] [--out DIR]
//              [--preset fig2|fig3|fig4] [--which single|min|max] [--n N]
//              [--threads T]
//
// Exit codes: 0 success, 2 parse error, 3 validation error, 4 I/O error.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "leodoppler/errors.hpp"
#include "run_config.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

using leodoppler::cli::RunConfig;

RunConfig load(const std::string& config_path, const std::string& out_dir) {
  if (config_path.empty()) throw leodoppler::ValidationError("--config is required");
  RunConfig cfg = leodoppler::cli::parse_config_file(config_path);
  cfg.output_dir = out_dir;
  return cfg;
}

int run(const std::string& command, const std::string& config_path, const std::string& out_dir,
        const std::string& preset, const std::string& which, std::size_t n, bool n_given,
        unsigned threads) {
  namespace cli = leodoppler::cli;
  if (command == "cdf") {
    std::cout << cli::cmd_cdf(load(config_path, out_dir)).string() << '\n';
  } else if (command == "pdf") {
    std::cout << cli::cmd_pdf(load(config_path, out_dir)).string() << '\n';
  } else if (command == "order-stats") {
    const RunConfig cfg = load(config_path, out_dir);
    const auto stat = cli::parse_statistic(which);
    if (!stat) throw cli::ConfigError("--which must be single, min or max", 0);
    std::cout << cli::cmd_order_stats(cfg, *stat, n_given ? n : cfg.users_per_cluster).string()
              << '\n';
  } else if (command == "simulate") {
    for (const auto& p : cli::cmd_simulate(load(config_path, out_dir), threads)) {
      std::cout << p.string() << '\n';
    }
  } else {
    const auto fig = cli::parse_preset(preset);
    if (!fig) throw cli::ConfigError("--preset must be fig2, fig3 or fig4", 0);
    cli::FigureOptions options;
    if (!config_path.empty()) {
      const RunConfig cfg = cli::parse_config_file(config_path);
      options.users_per_cluster = cfg.users_per_cluster;
      if (cfg.trials) options.trials = *cfg.trials;
      options.seed = cfg.seed;
      options.grid_points = cfg.grid_points;
    }
    for (const auto& p : cli::cmd_figure(*fig, options, out_dir, threads)) {
      std::cout << p.string() << '\n';
    }
  }
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Doppler shift magnitude distributions for clustered LEO satellite users"};
  std::string command;
  std::string config_path;
  std::string out_dir = ".";
  std::string preset;
  std::string which = "single";
  std::size_t n = 1;
  unsigned threads = 1;

  app.add_option("command", command, "cdf | pdf | order-stats | simulate | figure")
      ->required()
      ->check(CLI::IsMember({"cdf", "pdf", "order-stats", "simulate", "figure"}));
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--preset", preset, "figure preset")->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
  app.add_option("--which", which, "order statistic")
      ->check(CLI::IsMember({"single", "min", "max"}))
      ->capture_default_str();
  auto* n_opt = app.add_option("--n", n, "users per cluster for order statistics")
                    ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Monte Carlo worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }
  if (command == "figure" && preset.empty()) {
    std::cerr << "figure needs --preset\n";
    return kExitParse;
  }

  try {
    return run(command, config_path, out_dir, preset, which, n, n_opt->count() > 0, threads);
  } catch (const leodoppler::cli::ConfigError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const leodoppler::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const leodoppler::DomainError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const leodoppler::cli::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitIo;
  }
}
