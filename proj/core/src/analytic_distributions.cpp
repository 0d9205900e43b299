#include "leodoppler/analytic_distributions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "leodoppler/errors.hpp"
#include "leodoppler/numeric.hpp"

namespace leodoppler {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuantileTolHz = 1e-6;

void require_nonnegative(double x, const char* where) {
  if (!(x >= 0.0)) throw DomainError(std::string(where) + ": argument must be >= 0");
}

void require_users(std::size_t n) {
  if (n < 1) throw DomainError("order statistics need N >= 1");
}

void require_overhead(const DopplerMagnitudeDistribution& d) {
  if (d.center_offset() != 0.0) {
    throw DomainError("overhead closed form needs the satellite above the cluster center");
  }
}

}  // namespace

DiskDistanceDistribution::DiskDistanceDistribution(double radius, double offset)
    : radius_(radius), offset_(offset) {
  if (!(std::isfinite(radius) && radius > 0.0)) throw ValidationError("disk radius must be > 0");
  if (!(std::isfinite(offset) && offset >= 0.0)) {
    throw ValidationError("disk offset must be >= 0");
  }
}

double DiskDistanceDistribution::lower() const { return std::max(0.0, offset_ - radius_); }
double DiskDistanceDistribution::upper() const { return offset_ + radius_; }

double DiskDistanceDistribution::cdf(double r) const {
  const double big_r = radius_;
  const double off = offset_;
  if (r <= 0.0) return 0.0;
  if (r >= upper()) return 1.0;
  // Inner branch: the whole circle of radius r lies inside the disk. R̂ = 0
  // always lands here, which avoids the 1/R̂ in the lens angles.
  if (off < big_r && r <= big_r - off) return (r * r) / (big_r * big_r);
  if (off >= big_r && r <= off - big_r) return 0.0;

  const double theta = safe_acos((r * r + off * off - big_r * big_r) / (2.0 * off * r), "theta*");
  const double phi =
      safe_acos((big_r * big_r + off * off - r * r) / (2.0 * off * big_r), "phi*");
  return (r * r) / (kPi * big_r * big_r) * (theta - 0.5 * std::sin(2.0 * theta)) +
         (phi - 0.5 * std::sin(2.0 * phi)) / kPi;
}

double DiskDistanceDistribution::pdf(double r) const {
  const double big_r = radius_;
  const double off = offset_;
  if (r < 0.0 || r > upper()) return 0.0;
  if (off < big_r && r <= big_r - off) return 2.0 * r / (big_r * big_r);
  if (off >= big_r && r <= off - big_r) return 0.0;
  const double theta = safe_acos((r * r + off * off - big_r * big_r) / (2.0 * off * r), "theta*");
  return 2.0 * r * theta / (kPi * big_r * big_r);
}

double doppler_scale(const SatelliteConfig& cfg) {
  return cfg.carrier_hz * orbital_radius(cfg) * angular_velocity_ecf(cfg) / cfg.light_speed;
}

DopplerMagnitudeDistribution::DopplerMagnitudeDistribution(double scale_hz, double altitude_m,
                                                           double cluster_radius_m,
                                                           double center_offset_m)
    : scale_(scale_hz), altitude_(altitude_m), disk_(cluster_radius_m, center_offset_m) {
  if (!(std::isfinite(scale_hz) && scale_hz > 0.0)) {
    throw ValidationError("Doppler scale A must be > 0");
  }
  if (!(std::isfinite(altitude_m) && altitude_m > 0.0)) {
    throw ValidationError("altitude h must be > 0");
  }
}

DopplerMagnitudeDistribution DopplerMagnitudeDistribution::from_slant_range(
    double scale_hz, double altitude_m, double cluster_radius_m, double slant_range_m) {
  if (!(slant_range_m >= altitude_m)) {
    throw ValidationError("slant range to the cluster center must be >= h");
  }
  const double offset = std::sqrt((slant_range_m - altitude_m) * (slant_range_m + altitude_m));
  return {scale_hz, altitude_m, cluster_radius_m, offset};
}

DopplerMagnitudeDistribution DopplerMagnitudeDistribution::for_satellite(
    const SatelliteConfig& cfg, double cluster_radius_m, double center_offset_m) {
  cfg.validate();
  return {doppler_scale(cfg), cfg.altitude_m, cluster_radius_m, center_offset_m};
}

double DopplerMagnitudeDistribution::magnitude_at(double z) const {
  return scale_ * z / std::hypot(altitude_, z);
}

double DopplerMagnitudeDistribution::distance_for(double x) const {
  return altitude_ * x / std::sqrt((scale_ - x) * (scale_ + x));
}

double DopplerMagnitudeDistribution::cdf(double x) const {
  require_nonnegative(x, "doppler_cdf");
  if (x >= support_max()) return 1.0;
  return disk_.cdf(distance_for(x));
}

double DopplerMagnitudeDistribution::pdf(double x) const {
  require_nonnegative(x, "doppler_pdf");
  if (x > support_max()) return 0.0;
  const double gap = (scale_ - x) * (scale_ + x);
  const double jacobian = altitude_ * scale_ * scale_ / (gap * std::sqrt(gap));
  return jacobian * disk_.pdf(distance_for(x));
}

double DopplerMagnitudeDistribution::support_min() const { return magnitude_at(disk_.lower()); }

double DopplerMagnitudeDistribution::support_max() const { return magnitude_at(disk_.upper()); }

std::vector<double> DopplerMagnitudeDistribution::breakpoints() const {
  std::vector<double> out;
  const double rho = disk_.radius();
  const double off = disk_.offset();
  if (off > 0.0 && off != rho) out.push_back(magnitude_at(std::abs(rho - off)));
  out.push_back(support_max());
  return out;
}

double DopplerMagnitudeDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("doppler_quantile: p outside [0, 1]");
  double lo = support_min();
  double hi = support_max();
  if (p == 0.0) return lo;
  if (p == 1.0) return hi;
  // Invariant: cdf(lo) < p <= cdf(hi).
  for (int i = 0; i < 200 && hi - lo > kQuantileTolHz; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf(mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double min_doppler_cdf(double x, const DopplerMagnitudeDistribution& d, std::size_t n) {
  require_users(n);
  if (n == 1) return d.cdf(x);
  return 1.0 - std::pow(1.0 - d.cdf(x), static_cast<double>(n));
}

double min_doppler_pdf(double x, const DopplerMagnitudeDistribution& d, std::size_t n) {
  require_users(n);
  const double tail = 1.0 - d.cdf(x);
  return static_cast<double>(n) * std::pow(tail, static_cast<double>(n - 1)) * d.pdf(x);
}

double max_doppler_cdf(double x, const DopplerMagnitudeDistribution& d, std::size_t n) {
  require_users(n);
  if (n == 1) return d.cdf(x);
  return std::pow(d.cdf(x), static_cast<double>(n));
}

double max_doppler_pdf(double x, const DopplerMagnitudeDistribution& d, std::size_t n) {
  require_users(n);
  return static_cast<double>(n) * std::pow(d.cdf(x), static_cast<double>(n - 1)) * d.pdf(x);
}

double overhead_cdf(double x, const DopplerMagnitudeDistribution& d) {
  require_overhead(d);
  require_nonnegative(x, "overhead_cdf");
  if (x >= d.support_max()) return 1.0;
  const double a = d.scale();
  const double h = d.altitude();
  const double rho = d.cluster_radius();
  return (h * h) / (rho * rho) * (x * x) / (a * a - x * x);
}

double overhead_pdf(double x, const DopplerMagnitudeDistribution& d) {
  require_overhead(d);
  require_nonnegative(x, "overhead_pdf");
  if (x > d.support_max()) return 0.0;
  const double a = d.scale();
  const double h = d.altitude();
  const double rho = d.cluster_radius();
  const double gap = a * a - x * x;
  return 2.0 * a * a * h * h / (rho * rho) * x / (gap * gap);
}

}  // namespace leodoppler
