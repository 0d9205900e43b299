#include "leodoppler/doppler_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "leodoppler/errors.hpp"
#include "leodoppler/numeric.hpp"

namespace leodoppler {

namespace {

double on_track_scale(const SatelliteConfig& cfg) {
  return cfg.carrier_hz * cfg.earth_radius_m * angular_velocity_ecf(cfg) / cfg.light_speed;
}

void require_alpha(double alpha, const char* where) {
  if (!(alpha >= 0.0 && alpha <= std::numbers::pi / 2)) {
    throw DomainError(std::string(where) + ": elevation outside [0, pi/2]");
  }
}

}  // namespace

PassGeometry PassGeometry::from_alpha_max(double alpha_max, const SatelliteConfig& cfg,
                                          double t_alpha_max) {
  return PassGeometry(alpha_max, t_alpha_max, theta_of_alpha_max(alpha_max, cfg));
}

PassGeometry PassGeometry::from_cross_track(double cross_track, const SatelliteConfig& cfg,
                                            double t_alpha_max) {
  const double beta = std::abs(cross_track);
  const auto alpha = elevation_from_central_angle(beta, cfg);
  if (!alpha) throw DomainError("PassGeometry: satellite never rises for this cross-track angle");
  return PassGeometry(*alpha, t_alpha_max, std::cos(beta));
}

double theta_of_alpha_max(double alpha_max, const SatelliteConfig& cfg) {
  require_alpha(alpha_max, "theta_of_alpha_max");
  const double ratio = cfg.earth_radius_m / orbital_radius(cfg);
  return std::cos(safe_acos(ratio * std::cos(alpha_max)) - alpha_max);
}

double gamma_dot(double dt, double theta, const SatelliteConfig& cfg) {
  const double w = angular_velocity_ecf(cfg);
  const double x = dt * w;
  const double s = std::sin(x);
  const double c = std::cos(x);
  // 1 − Θ² cos² x = sin² x + (1 − Θ²) cos² x keeps the Θ → 1 limit exact.
  const double denom = std::sqrt(s * s + (1.0 - theta * theta) * c * c);
  if (denom == 0.0) return 0.0;
  return w * theta * s / denom;
}

double doppler_exact(double dt, const PassGeometry& pass, const SatelliteConfig& cfg) {
  const double w = angular_velocity_ecf(cfg);
  const double theta = pass.theta();
  const double s_t = slant_range(dt, theta, cfg);
  return -(cfg.carrier_hz / cfg.light_speed) * cfg.earth_radius_m * orbital_radius(cfg) * w *
         std::sin(dt * w) * theta / s_t;
}

double doppler_exact_rate_form(double dt, const PassGeometry& pass, const SatelliteConfig& cfg) {
  const double gamma = central_angle(dt, pass.theta(), cfg);
  const double cos_alpha = elevation_cosine(gamma, cfg);
  return -(cfg.carrier_hz * cfg.earth_radius_m / cfg.light_speed) *
         gamma_dot(dt, pass.theta(), cfg) * cos_alpha;
}

double doppler_bound(double alpha_t, const SatelliteConfig& cfg) {
  require_alpha(alpha_t, "doppler_bound");
  return on_track_scale(cfg) * std::cos(alpha_t);
}

std::optional<EpsilonWindow> epsilon_accuracy_offsets(double epsilon, double theta,
                                                      const SatelliteConfig& cfg) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw DomainError("epsilon_accuracy_offsets: epsilon outside (0, 1]");
  }
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw DomainError("epsilon_accuracy_offsets: Theta outside (0, 1]");
  }
  if (theta == 1.0) return std::nullopt;
  const double keep = (1.0 - epsilon) * (1.0 - epsilon);
  const double radicand = (1.0 - keep / (theta * theta)) / (1.0 - keep);
  if (radicand < 0.0) return std::nullopt;
  const double w = angular_velocity_ecf(cfg);
  const double root = std::sqrt(std::min(radicand, 1.0));
  return EpsilonWindow{std::acos(root) / w, std::acos(-root) / w};
}

}  // namespace leodoppler
