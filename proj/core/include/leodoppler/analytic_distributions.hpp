#pragma once

#include <cstddef>
#include <vector>

#include "leodoppler/orbital_geometry.hpp"

namespace leodoppler {

/// Distance from a fixed point to a point drawn uniformly in a disk of
/// radius `radius`, the fixed point lying `offset` from the disk center.
class DiskDistanceDistribution {
 public:
  /// Throws ValidationError unless radius > 0 and offset >= 0.
  DiskDistanceDistribution(double radius, double offset);

  double radius() const { return radius_; }
  double offset() const { return offset_; }

  /// Support of the distance: [max(0, offset − radius), offset + radius].
  double lower() const;
  double upper() const;

  double cdf(double r) const;
  double pdf(double r) const;

 private:
  double radius_;
  double offset_;
};

/// Doppler scale A = f_c r_o (ω_s + ω_E cos θ_i) / c, in Hz.
double doppler_scale(const SatelliteConfig& cfg);

/// Law of the on-track Doppler envelope A z / sqrt(h² + z²) at a UE drawn
/// uniformly from a cluster of radius ρ whose center is R̂_t from the
/// sub-satellite point. The law does not depend on the number of UEs in the
/// cluster; order statistics take N separately.
class DopplerMagnitudeDistribution {
 public:
  /// Throws ValidationError unless scale, altitude, cluster radius > 0 and
  /// center offset >= 0.
  DopplerMagnitudeDistribution(double scale_hz, double altitude_m, double cluster_radius_m,
                               double center_offset_m);

  /// Offset derived from the slant range to the cluster center,
  /// R̂_t = sqrt(s_t² − h²). Throws ValidationError if s_t < h.
  static DopplerMagnitudeDistribution from_slant_range(double scale_hz, double altitude_m,
                                                       double cluster_radius_m,
                                                       double slant_range_m);

  static DopplerMagnitudeDistribution for_satellite(const SatelliteConfig& cfg,
                                                    double cluster_radius_m,
                                                    double center_offset_m);

  double scale() const { return scale_; }
  double altitude() const { return altitude_; }
  double cluster_radius() const { return disk_.radius(); }
  double center_offset() const { return disk_.offset(); }
  const DiskDistanceDistribution& distance_law() const { return disk_; }

  /// Envelope magnitude seen at ground distance z from the sub-satellite point.
  double magnitude_at(double z) const;
  /// Inverse of magnitude_at on [0, A).
  double distance_for(double x) const;

  /// Throws DomainError for x < 0.
  double cdf(double x) const;
  double pdf(double x) const;

  double support_min() const;
  /// A (R̂_t + ρ) / sqrt(h² + (R̂_t + ρ)²).
  double support_max() const;
  /// Ascending abscissae where the density changes analytic form, including
  /// the support edges that are > 0.
  std::vector<double> breakpoints() const;

  /// Smallest x with cdf(x) >= p, by bisection to 1e-6 Hz. p = 0 maps to the
  /// left support edge. Throws DomainError outside [0, 1].
  double quantile(double p) const;

 private:
  double scale_;
  double altitude_;
  DiskDistanceDistribution disk_;
};

/// CDF and PDF of the smallest of N i.i.d. in-cluster magnitudes.
double min_doppler_cdf(double x, const DopplerMagnitudeDistribution& d, std::size_t n);
double min_doppler_pdf(double x, const DopplerMagnitudeDistribution& d, std::size_t n);
/// CDF and PDF of the largest of N i.i.d. in-cluster magnitudes.
double max_doppler_cdf(double x, const DopplerMagnitudeDistribution& d, std::size_t n);
double max_doppler_pdf(double x, const DopplerMagnitudeDistribution& d, std::size_t n);

/// Closed forms for a satellite directly above the cluster center:
/// F(x) = (h²/ρ²) x² / (A² − x²), f(x) = (2 A² h² / ρ²) x / (A² − x²)².
/// Throw DomainError when the distribution's center offset is not 0.
double overhead_cdf(double x, const DopplerMagnitudeDistribution& d);
double overhead_pdf(double x, const DopplerMagnitudeDistribution& d);

}  // namespace leodoppler
