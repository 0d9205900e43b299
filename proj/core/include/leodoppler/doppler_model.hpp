#pragma once

#include <optional>

#include "leodoppler/orbital_geometry.hpp"

namespace leodoppler {

/// Pass of the satellite as seen from one UE. Time is measured as an offset
/// from the instant of maximum elevation.
class PassGeometry {
 public:
  /// Throws DomainError unless alpha_max ∈ [0, π/2].
  static PassGeometry from_alpha_max(double alpha_max, const SatelliteConfig& cfg,
                                     double t_alpha_max = 0.0);

  /// Pass of a UE whose perpendicular distance from the ground track is the
  /// central angle `cross_track` (so Θ = cos β). Throws DomainError when
  /// the satellite never rises above that UE's horizon.
  static PassGeometry from_cross_track(double cross_track, const SatelliteConfig& cfg,
                                       double t_alpha_max = 0.0);

  double alpha_max() const { return alpha_max_; }
  double t_alpha_max() const { return t_alpha_max_; }
  /// Cosine of the minimum central angle over the pass.
  double theta() const { return theta_; }

 private:
  PassGeometry(double alpha_max, double t_alpha_max, double theta)
      : alpha_max_(alpha_max), t_alpha_max_(t_alpha_max), theta_(theta) {}

  double alpha_max_;
  double t_alpha_max_;
  double theta_;
};

/// Θ[α_max] = cos(arccos((r_E/r_o) cos α_max) − α_max). Strictly increasing,
/// from r_E/r_o at α_max = 0 to 1 overhead.
double theta_of_alpha_max(double alpha_max, const SatelliteConfig& cfg);

/// Rate of change of the central angle, γ̇. For Θ = 1 this is ±ω_F with the
/// sign of sin(dt ω_F), and 0 at dt = 0.
double gamma_dot(double dt, double theta, const SatelliteConfig& cfg);

/// Signed Doppler shift at offset dt, slant-range form:
/// −(f_c/c) r_E r_o ω_F sin(dt ω_F) Θ / s_t.
double doppler_exact(double dt, const PassGeometry& pass, const SatelliteConfig& cfg);

/// Same shift, written as −(f_c r_E / c) γ̇ cos α_t.
double doppler_exact_rate_form(double dt, const PassGeometry& pass, const SatelliteConfig& cfg);

/// On-track envelope (f_c r_E ω_F / c) cos α_t. Dominates |doppler_exact|
/// at equal instantaneous elevation.
double doppler_bound(double alpha_t, const SatelliteConfig& cfg);

/// Offsets |dt| between which the on-track envelope is within a relative
/// error ε of the exact shift. `inner` = arccos(+r)/ω_F, `outer` =
/// arccos(−r)/ω_F.
struct EpsilonWindow {
  double inner = 0.0;  // s
  double outer = 0.0;  // s
};

/// nullopt when the error never crosses ε: Θ = 1 (envelope exact) or
/// (1 − ε) > Θ (negative radicand).
std::optional<EpsilonWindow> epsilon_accuracy_offsets(double epsilon, double theta,
                                                      const SatelliteConfig& cfg);

}  // namespace leodoppler
