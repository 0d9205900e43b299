#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "leodoppler/analytic_distributions.hpp"
#include "leodoppler/monte_carlo.hpp"
#include "leodoppler/orbital_geometry.hpp"

namespace leodoppler::cli {

/// Malformed configuration text. `line()` is 1-based, 0 when not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  SatelliteConfig satellite;
  double cluster_radius_m = 100e3;
  double center_offset_m = 0.0;
  std::size_t users_per_cluster = 1;
  std::optional<std::size_t> trials;  // a scenario exists iff set
  std::uint64_t seed = 1;
  std::size_t grid_points = 512;
  std::filesystem::path output_dir = ".";

  /// Throws ValidationError.
  void validate() const;
  DopplerMagnitudeDistribution distribution() const;
  std::optional<ScenarioConfig> scenario() const;
};

/// Parses line-oriented `key = value [unit]` text. `#` starts a comment.
/// Keys: fc_ghz, h_km, omega_s_rad_s, omega_e_rad_s, theta_i_rad, r_e_km,
/// rho_km, r_hat_km, n_users, trials, seed, grid_points.
///
/// Throws ConfigError for syntax, unknown or repeated keys and unit
/// mismatches; ValidationError when the result breaks an invariant or h_km
/// is missing.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_file(const std::filesystem::path& path);

}  // namespace leodoppler::cli
