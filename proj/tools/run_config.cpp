#include "run_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <vector>

#include "leodoppler/errors.hpp"

namespace leodoppler::cli {

namespace {

enum class Kind { kReal, kCount };

struct KeySpec {
  Kind kind;
  std::string_view unit;  // empty for dimensionless counts
};

const std::map<std::string, KeySpec, std::less<>>& known_keys() {
  static const std::map<std::string, KeySpec, std::less<>> keys = {
      {"fc_ghz", {Kind::kReal, "ghz"}},
      {"h_km", {Kind::kReal, "km"}},
      {"omega_s_rad_s", {Kind::kReal, "rad/s"}},
      {"omega_e_rad_s", {Kind::kReal, "rad/s"}},
      {"theta_i_rad", {Kind::kReal, "rad"}},
      {"r_e_km", {Kind::kReal, "km"}},
      {"rho_km", {Kind::kReal, "km"}},
      {"r_hat_km", {Kind::kReal, "km"}},
      {"n_users", {Kind::kCount, ""}},
      {"trials", {Kind::kCount, ""}},
      {"seed", {Kind::kCount, ""}},
      {"grid_points", {Kind::kCount, ""}},
  };
  return keys;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

struct Value {
  double real = 0.0;
  std::uint64_t count = 0;
};

Value parse_value(std::string_view key, const KeySpec& info, std::string_view text,
                  std::size_t line) {
  const auto tokens = split_ws(text);
  if (tokens.empty()) throw ConfigError("missing value for '" + std::string(key) + "'", line);
  if (tokens.size() > 2) throw ConfigError("trailing text after value of '" + std::string(key) + "'", line);

  if (tokens.size() == 2) {
    if (info.unit.empty()) {
      throw ConfigError("unit suffix given for dimensionless key '" + std::string(key) + "'",
                        line);
    }
    if (lower(tokens[1]) != info.unit) {
      throw ConfigError("unit mismatch for '" + std::string(key) + "': expected " +
                            std::string(info.unit) + ", got " + std::string(tokens[1]),
                        line);
    }
  }

  const std::string_view num = tokens[0];
  Value v;
  std::from_chars_result res{};
  if (info.kind == Kind::kReal) {
    res = std::from_chars(num.data(), num.data() + num.size(), v.real);
  } else {
    res = std::from_chars(num.data(), num.data() + num.size(), v.count);
  }
  if (res.ec != std::errc{} || res.ptr != num.data() + num.size()) {
    throw ConfigError("cannot parse value '" + std::string(num) + "' for '" + std::string(key) +
                          "'",
                      line);
  }
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

}  // namespace

ConfigError::ConfigError(const std::string& message, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

void RunConfig::validate() const {
  satellite.validate();
  require(std::isfinite(cluster_radius_m) && cluster_radius_m > 0.0, "rho_km must be > 0");
  require(std::isfinite(center_offset_m) && center_offset_m >= 0.0, "r_hat_km must be >= 0");
  require(users_per_cluster >= 1, "n_users must be >= 1");
  require(!trials || *trials >= 1, "trials must be >= 1");
  require(grid_points >= 2, "grid_points must be >= 2");
}

DopplerMagnitudeDistribution RunConfig::distribution() const {
  return DopplerMagnitudeDistribution::for_satellite(satellite, cluster_radius_m,
                                                     center_offset_m);
}

std::optional<ScenarioConfig> RunConfig::scenario() const {
  if (!trials) return std::nullopt;
  ScenarioConfig s;
  s.satellite = satellite;
  s.cluster_radius_m = cluster_radius_m;
  s.center_offset_m = center_offset_m;
  s.users_per_cluster = users_per_cluster;
  s.trials = *trials;
  s.seed = seed;
  s.grid_points = grid_points;
  return s;
}

RunConfig parse_config(std::istream& in) {
  std::map<std::string, Value, std::less<>> values;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line);
    const std::string key(trim(text.substr(0, eq)));
    const auto info = known_keys().find(key);
    if (info == known_keys().end()) throw ConfigError("unknown key '" + key + "'", line);
    if (values.contains(key)) throw ConfigError("duplicate key '" + key + "'", line);
    values.emplace(key, parse_value(key, info->second, text.substr(eq + 1), line));
  }

  const auto real = [&](std::string_view key, double fallback) {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second.real;
  };
  const auto count = [&](std::string_view key, std::uint64_t fallback) {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second.count;
  };

  if (!values.contains("h_km")) throw ValidationError("h_km is required");

  RunConfig cfg;
  SatelliteConfig& sat = cfg.satellite;
  sat.carrier_hz = real("fc_ghz", 2.0) * 1e9;
  sat.altitude_m = real("h_km", 0.0) * 1e3;
  sat.omega_e = real("omega_e_rad_s", kEarthRotationRate);
  sat.inclination_rad = real("theta_i_rad", 0.0);
  sat.earth_radius_m = real("r_e_km", kEarthRadius / 1e3) * 1e3;
  require(std::isfinite(sat.altitude_m) && sat.altitude_m > 0.0, "h_km must be > 0");
  if (values.contains("omega_s_rad_s")) {
    sat.omega_s = real("omega_s_rad_s", 0.0);
  } else if (sat.altitude_m == leo_600km().altitude_m) {
    sat.omega_s = leo_600km().omega_s;
  } else if (sat.altitude_m == leo_1200km().altitude_m) {
    sat.omega_s = leo_1200km().omega_s;
  } else {
    throw ValidationError("omega_s_rad_s is required unless h_km is 600 or 1200");
  }

  cfg.cluster_radius_m = real("rho_km", cfg.cluster_radius_m / 1e3) * 1e3;
  cfg.center_offset_m = real("r_hat_km", 0.0) * 1e3;
  cfg.users_per_cluster = count("n_users", 1);
  if (values.contains("trials")) cfg.trials = count("trials", 1);
  cfg.seed = count("seed", 1);
  cfg.grid_points = count("grid_points", 512);
  cfg.validate();
  return cfg;
}

RunConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path.string());
  return parse_config(in);
}

}  // namespace leodoppler::cli
