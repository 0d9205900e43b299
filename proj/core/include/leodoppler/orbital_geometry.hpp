#pragma once

#include <optional>

namespace leodoppler {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact
inline constexpr double kEarthRadius = 6'371'000.0;     // m, mean
inline constexpr double kEarthRotationRate = 7.27e-5;   // rad/s, ECI

/// Physical and orbital constants of one satellite and its carrier.
/// All members are SI: Hz, m, rad/s, rad.
struct SatelliteConfig {
  double carrier_hz = 2.0e9;
  double altitude_m = 0.0;
  double omega_s = 0.0;  // satellite angular velocity, ECI
  double omega_e = kEarthRotationRate;
  double inclination_rad = 0.0;
  double earth_radius_m = kEarthRadius;
  double light_speed = kSpeedOfLight;

  /// Throws ValidationError naming the first violated invariant.
  void validate() const;

  bool operator==(const SatelliteConfig&) const = default;
};

/// 2 GHz carrier, 600 km altitude, ω_s = 0.0011 rad/s, equatorial orbit.
SatelliteConfig leo_600km();
/// 2 GHz carrier, 1200 km altitude, ω_s = 9.5809e-4 rad/s, equatorial orbit.
SatelliteConfig leo_1200km();

/// Point on the tangent plane at the cluster center. The x axis runs along
/// the ground track in the direction of satellite motion.
struct PlanarPoint {
  double x = 0.0;  // m
  double y = 0.0;  // m

  bool operator==(const PlanarPoint&) const = default;
};

double distance(PlanarPoint a, PlanarPoint b);

/// r_E + h.
double orbital_radius(const SatelliteConfig& cfg);

/// Angular rate of the sub-satellite point in the earth-fixed frame,
/// ω_F ≈ ω_s + ω_E cos(θ_i).
double angular_velocity_ecf(const SatelliteConfig& cfg);

/// Satellite-to-UE distance at time offset dt from the UE's maximum
/// elevation, for a pass whose minimum central angle has cosine `theta`.
/// Throws DomainError if theta is outside [0, 1].
double slant_range(double dt, double theta, const SatelliteConfig& cfg);

/// Central angle between sub-satellite point and UE: arccos(cos(dt ω_F) Θ).
double central_angle(double dt, double theta, const SatelliteConfig& cfg);

/// Slant range from the central angle alone (law of cosines).
double slant_range_from_central_angle(double gamma, const SatelliteConfig& cfg);

/// r_o sin γ / s. This is cos α on the visible branch; it is returned
/// without a horizon check.
double elevation_cosine(double gamma, const SatelliteConfig& cfg);

/// Elevation angle for central angle γ ∈ [0, π], or nullopt when the
/// satellite is below the UE's horizon (r_o cos γ < r_E).
std::optional<double> elevation_from_central_angle(double gamma,
                                                   const SatelliteConfig& cfg);

/// Flat-earth approximation of cos α for a UE at ground distance z from the
/// sub-satellite point: r_o z / (r_E sqrt(h² + z²)). Not clamped; exceeds 1
/// past the approximate horizon.
double elevation_planar_approx(double z, const SatelliteConfig& cfg);

/// Spherical offsets of a UE from the cluster center, which lies on the
/// ground track.
struct SphericalOffset {
  double cross_track = 0.0;  // β, rad
  double along_track = 0.0;  // ψ, rad

  /// Great-circle angle from the cluster center, cos γ = cos β cos ψ.
  double central_angle() const;
};

/// Azimuthal-equidistant inverse about the cluster center: β = y / r_E,
/// ψ = x / r_E. Throws DomainError when |p| exceeds π r_E / 4.
SphericalOffset plane_to_sphere(PlanarPoint p, const SatelliteConfig& cfg);

}  // namespace leodoppler
