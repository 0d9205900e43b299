#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "leodoppler/analytic_distributions.hpp"
#include "leodoppler/orbital_geometry.hpp"

namespace leodoppler {

/// One frozen-instant experiment: `trials` independent clusters of
/// `users_per_cluster` UEs, each cluster centered at the planar origin.
///
/// With `cluster_center_on_track` the ground track is the x axis and the
/// sub-satellite point sits at (R̂_t, 0), ahead of the cluster center. Without
/// it the satellite is at closest approach to the center: the sub-satellite
/// point is (0, R̂_t) and the ground track is the line y = R̂_t.
struct ScenarioConfig {
  SatelliteConfig satellite;
  double cluster_radius_m = 0.0;
  double center_offset_m = 0.0;  // R̂_t
  std::size_t users_per_cluster = 1;
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  bool cluster_center_on_track = true;
  std::size_t grid_points = 512;

  /// Throws ValidationError naming the violated invariant.
  void validate() const;

  DopplerMagnitudeDistribution analytic() const;
  PlanarPoint subsatellite_point() const;
  std::size_t sample_count() const { return users_per_cluster * trials; }
};

/// Right-continuous step function of a nonempty sample.
class EmpiricalCdf {
 public:
  /// Throws DomainError when `samples` is empty.
  explicit EmpiricalCdf(std::vector<double> samples);

  /// Fraction of samples <= x.
  double operator()(double x) const;

  std::span<const double> sorted_samples() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

/// Kolmogorov–Smirnov distance sup |F_n − F| for a nondecreasing `cdf`,
/// evaluated on both sides of every jump of F_n. Tied samples form one jump;
/// the left side compares against cdf just below the sample value.
template <class Cdf>
double ks_distance(const EmpiricalCdf& e, Cdf&& cdf) {
  const auto xs = e.sorted_samples();
  const double n = static_cast<double>(xs.size());
  double worst = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    const double x = xs[i];
    std::size_t j = i;
    while (j < xs.size() && xs[j] == x) ++j;
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(j) / n;
    const double left = cdf(std::nextafter(x, -std::numeric_limits<double>::infinity()));
    worst = std::max({worst, std::abs(above - cdf(x)), std::abs(below - left)});
    i = j;
  }
  return worst;
}

/// Signed exact Doppler at UE `p`, reconstructed on the sphere: the UE's
/// cross-track angle fixes its pass (Θ = cos β) and the along-track angle
/// between UE and sub-satellite point fixes dt. nullopt when the satellite
/// is below the UE's horizon.
std::optional<double> exact_doppler_for_user(PlanarPoint p, const ScenarioConfig& scenario);

/// On-track envelope with the flat-earth elevation, A z / sqrt(h² + z²),
/// where z is the planar distance from `p` to the sub-satellite point.
double bound_doppler_for_user(PlanarPoint p, const ScenarioConfig& scenario);

struct ComparisonRow {
  double x_hz = 0.0;
  double cdf_analytic = 0.0;
  double cdf_emp_exact = 0.0;
  double cdf_emp_bound = 0.0;
};

struct ComparisonReport {
  double ks_bound = 0.0;  // empirical envelope vs analytic
  double ks_exact = 0.0;  // empirical exact vs analytic
  /// Grid points where F_analytic exceeds F_emp_exact by more than three
  /// binomial standard errors.
  std::size_t dominance_violations = 0;
  /// UEs with the satellite below their horizon.
  std::size_t excluded = 0;
  std::size_t samples = 0;
  std::vector<ComparisonRow> grid;
};

/// Samples every trial on its own RNG stream, so the report is identical for
/// any `threads` >= 1. Throws DomainError when every UE is below horizon.
ComparisonReport run_scenario(const ScenarioConfig& scenario, unsigned threads = 1);

/// `x_hz,cdf_analytic,cdf_emp_exact,cdf_emp_bound`, one row per grid point.
void write_report_csv(std::ostream& out, const ComparisonReport& report);
/// key=value lines: ks_bound, ks_exact, violations, excluded.
void write_summary(std::ostream& out, const ComparisonReport& report);

}  // namespace leodoppler
