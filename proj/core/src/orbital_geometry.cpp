#include "leodoppler/orbital_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "leodoppler/errors.hpp"
#include "leodoppler/numeric.hpp"

namespace leodoppler {

namespace {

void require(bool ok, const char* invariant) {
  if (!ok) throw ValidationError(std::string("SatelliteConfig: ") + invariant);
}

// r_E² + r_o² − 2 r_o r_E k as h² + 2 r_o r_E (1 − k).
double law_of_cosines(double one_minus_k, const SatelliteConfig& cfg) {
  const double h = cfg.altitude_m;
  const double r_o = orbital_radius(cfg);
  return std::sqrt(h * h + 2.0 * r_o * cfg.earth_radius_m * one_minus_k);
}

}  // namespace

void SatelliteConfig::validate() const {
  require(std::isfinite(carrier_hz) && carrier_hz > 0.0, "carrier frequency must be > 0");
  require(std::isfinite(altitude_m) && altitude_m > 0.0, "altitude h must be > 0");
  require(std::isfinite(omega_s) && omega_s > 0.0, "omega_s must be > 0");
  require(std::isfinite(omega_e) && omega_e >= 0.0, "omega_E must be >= 0");
  require(std::isfinite(inclination_rad) && inclination_rad >= 0.0 &&
              inclination_rad <= std::numbers::pi,
          "inclination must lie in [0, pi]");
  require(std::isfinite(earth_radius_m) && earth_radius_m > 0.0, "earth radius must be > 0");
  require(std::isfinite(light_speed) && light_speed > 0.0, "speed of light must be > 0");
}

SatelliteConfig leo_600km() {
  SatelliteConfig cfg;
  cfg.altitude_m = 600e3;
  cfg.omega_s = 0.0011;
  return cfg;
}

SatelliteConfig leo_1200km() {
  SatelliteConfig cfg;
  cfg.altitude_m = 1200e3;
  cfg.omega_s = 9.5809e-4;
  return cfg;
}

double distance(PlanarPoint a, PlanarPoint b) { return std::hypot(a.x - b.x, a.y - b.y); }

double orbital_radius(const SatelliteConfig& cfg) { return cfg.earth_radius_m + cfg.altitude_m; }

double angular_velocity_ecf(const SatelliteConfig& cfg) {
  return cfg.omega_s + cfg.omega_e * std::cos(cfg.inclination_rad);
}

double slant_range(double dt, double theta, const SatelliteConfig& cfg) {
  if (!(theta >= 0.0 && theta <= 1.0 + kUnitClampTolerance)) {
    throw DomainError("slant_range: Theta outside [0, 1]");
  }
  theta = std::min(theta, 1.0);
  const double half = 0.5 * dt * angular_velocity_ecf(cfg);
  const double s = std::sin(half);
  // 1 − Θ cos x = (1 − Θ) + 2 Θ sin²(x/2)
  return law_of_cosines((1.0 - theta) + 2.0 * theta * s * s, cfg);
}

double central_angle(double dt, double theta, const SatelliteConfig& cfg) {
  return safe_acos(std::cos(dt * angular_velocity_ecf(cfg)) * theta, "central_angle");
}

double slant_range_from_central_angle(double gamma, const SatelliteConfig& cfg) {
  const double s = std::sin(0.5 * gamma);
  return law_of_cosines(2.0 * s * s, cfg);
}

double elevation_cosine(double gamma, const SatelliteConfig& cfg) {
  return orbital_radius(cfg) * std::sin(gamma) / slant_range_from_central_angle(gamma, cfg);
}

std::optional<double> elevation_from_central_angle(double gamma, const SatelliteConfig& cfg) {
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi)) {
    throw DomainError("elevation_from_central_angle: gamma outside [0, pi]");
  }
  const double r_o = orbital_radius(cfg);
  const double r_e = cfg.earth_radius_m;
  // Satellite height above the UE's local horizontal plane.
  const double rise = r_o * std::cos(gamma) - r_e;
  if (rise < -1e-9 * r_e) return std::nullopt;
  return std::atan2(std::max(rise, 0.0), r_o * std::sin(gamma));
}

double elevation_planar_approx(double z, const SatelliteConfig& cfg) {
  if (!(z >= 0.0)) throw DomainError("elevation_planar_approx: z must be >= 0");
  const double h = cfg.altitude_m;
  return orbital_radius(cfg) * z / (cfg.earth_radius_m * std::sqrt(h * h + z * z));
}

double SphericalOffset::central_angle() const {
  return safe_acos(std::cos(cross_track) * std::cos(along_track), "SphericalOffset");
}

SphericalOffset plane_to_sphere(PlanarPoint p, const SatelliteConfig& cfg) {
  const double r_e = cfg.earth_radius_m;
  if (!(std::hypot(p.x, p.y) <= std::numbers::pi * r_e / 4.0)) {
    throw DomainError("plane_to_sphere: point too far from the cluster center");
  }
  return {p.y / r_e, p.x / r_e};
}

}  // namespace leodoppler
