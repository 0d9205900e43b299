#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the code paths it is used to check.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "leodoppler/orbital_geometry.hpp"

namespace leodoppler::oracle {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

/// Earth-fixed 3D picture of one pass. The ground track is the equator of a
/// sphere of radius r_E; the satellite sits at phase x = dt·ω_F on a circle
/// of radius r_o; the UE is at cross-track central angle β.
struct Pass3d {
  double r_e;
  double r_o;
  double omega;  // ω_F
  double beta;

  Vec3 user() const { return {r_e * std::cos(beta), 0.0, r_e * std::sin(beta)}; }
  Vec3 satellite(double dt) const {
    const double x = dt * omega;
    return {r_o * std::cos(x), r_o * std::sin(x), 0.0};
  }
  Vec3 velocity(double dt) const {
    const double x = dt * omega;
    return {-r_o * omega * std::sin(x), r_o * omega * std::cos(x), 0.0};
  }
  double range(double dt) const { return norm(sub(satellite(dt), user())); }
  /// d|S − U|/dt from the velocity projection.
  double range_rate(double dt) const {
    const Vec3 d = sub(satellite(dt), user());
    return dot(d, velocity(dt)) / norm(d);
  }
  /// sin of the elevation angle, from the local zenith at the UE.
  double sin_elevation(double dt) const {
    const Vec3 d = sub(satellite(dt), user());
    const Vec3 up = user();
    return dot(d, up) / (norm(d) * norm(up));
  }
  double cos_elevation(double dt) const {
    const double s = sin_elevation(dt);
    return std::sqrt(std::max(0.0, 1.0 - s * s));
  }
};

inline Pass3d make_pass(const SatelliteConfig& cfg, double beta) {
  return {cfg.earth_radius_m, cfg.earth_radius_m + cfg.altitude_m,
          cfg.omega_s + cfg.omega_e * std::cos(cfg.inclination_rad), beta};
}

/// Elevation for central angle γ from a 3D dot product.
inline double elevation_3d(double gamma, const SatelliteConfig& cfg) {
  const double r_e = cfg.earth_radius_m;
  const double r_o = r_e + cfg.altitude_m;
  const Vec3 user{r_e, 0.0, 0.0};
  const Vec3 sat{r_o * std::cos(gamma), r_o * std::sin(gamma), 0.0};
  const Vec3 d = sub(sat, user);
  return std::asin(dot(d, user) / (norm(d) * r_e));
}

/// Bisection for a root of a monotone function on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 200) {
  const bool rising = f(hi) > f(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(mid) > 0.0) == rising) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Minimum central angle of the pass whose peak elevation is alpha_max.
inline double min_central_angle(double alpha_max, const SatelliteConfig& cfg) {
  const double r_e = cfg.earth_radius_m;
  const double horizon = std::acos(r_e / (r_e + cfg.altitude_m));
  return bisect([&](double g) { return elevation_3d(g, cfg) - alpha_max; }, 0.0, horizon);
}

/// Central finite difference.
inline double derivative(const std::function<double(double)>& f, double x, double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

/// Adaptive Gauss–Kronrod integral over consecutive segments of `knots`.
inline double integrate(const std::function<double(double)>& f, const std::vector<double>& knots,
                        double tol = 1e-12) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (knots[i + 1] <= knots[i]) continue;
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, knots[i],
                                                                           knots[i + 1], 15, tol);
  }
  return total;
}

/// Fraction of points uniform in the unit-radius disk (sampled by rejection
/// from the bounding square) within distance r of a point at distance
/// `offset` from the center. Returns {estimate, standard error}.
inline std::pair<double, double> disk_fraction_mc(double r, double offset, std::uint64_t n,
                                                  std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uint64_t inside = 0;
  std::uint64_t drawn = 0;
  while (drawn < n) {
    const double x = u(gen);
    const double y = u(gen);
    if (x * x + y * y > 1.0) continue;
    ++drawn;
    const double dx = x - offset;
    if (dx * dx + y * y <= r * r) ++inside;
  }
  const double p = static_cast<double>(inside) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

/// 99% critical value of sqrt(n)·KS for large n.
inline constexpr double kKs99 = 1.63;

}  // namespace leodoppler::oracle
