#include "leodoppler/monte_carlo.hpp"

#include <limits>
#include <ostream>
#include <thread>

#include "leodoppler/cluster_process.hpp"
#include "leodoppler/csv.hpp"
#include "leodoppler/doppler_model.hpp"
#include "leodoppler/errors.hpp"
#include "leodoppler/numeric.hpp"
#include "leodoppler/random.hpp"

namespace leodoppler {

void ScenarioConfig::validate() const {
  satellite.validate();
  if (!(std::isfinite(cluster_radius_m) && cluster_radius_m > 0.0)) {
    throw ValidationError("ScenarioConfig: rho must be > 0");
  }
  if (!(std::isfinite(center_offset_m) && center_offset_m >= 0.0)) {
    throw ValidationError("ScenarioConfig: R_hat_t must be >= 0");
  }
  if (users_per_cluster < 1) throw ValidationError("ScenarioConfig: N must be >= 1");
  if (trials < 1) throw ValidationError("ScenarioConfig: trials must be >= 1");
  if (grid_points < 2) throw ValidationError("ScenarioConfig: grid_points must be >= 2");
}

DopplerMagnitudeDistribution ScenarioConfig::analytic() const {
  return DopplerMagnitudeDistribution::for_satellite(satellite, cluster_radius_m,
                                                     center_offset_m);
}

PlanarPoint ScenarioConfig::subsatellite_point() const {
  return cluster_center_on_track ? PlanarPoint{center_offset_m, 0.0}
                                 : PlanarPoint{0.0, center_offset_m};
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw DomainError("EmpiricalCdf: no samples");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double x) const {
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

std::optional<double> exact_doppler_for_user(PlanarPoint p, const ScenarioConfig& scenario) {
  const SatelliteConfig& cfg = scenario.satellite;
  const PlanarPoint sub = scenario.subsatellite_point();
  // Shift so the ground track through the sub-satellite point is y = 0.
  const SphericalOffset off = plane_to_sphere({p.x, p.y - sub.y}, cfg);
  const double beta = off.cross_track;
  const double phase = sub.x / cfg.earth_radius_m - off.along_track;

  const double gamma = safe_acos(std::cos(beta) * std::cos(phase), "user central angle");
  if (!elevation_from_central_angle(gamma, cfg)) return std::nullopt;

  const PassGeometry pass = PassGeometry::from_cross_track(beta, cfg);
  return doppler_exact(phase / angular_velocity_ecf(cfg), pass, cfg);
}

double bound_doppler_for_user(PlanarPoint p, const ScenarioConfig& scenario) {
  const double z = distance(p, scenario.subsatellite_point());
  return doppler_scale(scenario.satellite) * z / std::hypot(scenario.satellite.altitude_m, z);
}

ComparisonReport run_scenario(const ScenarioConfig& scenario, unsigned threads) {
  scenario.validate();
  const DopplerMagnitudeDistribution analytic = scenario.analytic();
  const std::size_t per_trial = scenario.users_per_cluster;
  const std::size_t n = scenario.sample_count();
  constexpr double kExcluded = std::numeric_limits<double>::quiet_NaN();

  std::vector<double> exact(n);
  std::vector<double> bound(n);

  auto work = [&](std::size_t first_trial, std::size_t last_trial) {
    for (std::size_t t = first_trial; t < last_trial; ++t) {
      StreamRng rng(scenario.seed, t);
      const ClusterSample cluster =
          sample_uniform_disk({0.0, 0.0}, scenario.cluster_radius_m, per_trial, rng);
      for (std::size_t i = 0; i < per_trial; ++i) {
        const PlanarPoint& u = cluster.users[i];
        const auto chi = exact_doppler_for_user(u, scenario);
        exact[t * per_trial + i] = chi ? std::abs(*chi) : kExcluded;
        bound[t * per_trial + i] = bound_doppler_for_user(u, scenario);
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, scenario.trials);
  if (workers == 1) {
    work(0, scenario.trials);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (scenario.trials + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(scenario.trials, w * chunk);
      const std::size_t hi = std::min(scenario.trials, lo + chunk);
      pool.emplace_back(work, lo, hi);
    }
  }

  std::erase_if(exact, [](double v) { return std::isnan(v); });

  ComparisonReport report;
  report.samples = n;
  report.excluded = n - exact.size();
  const EmpiricalCdf emp_exact(std::move(exact));
  const EmpiricalCdf emp_bound(std::move(bound));
  const auto cdf = [&](double x) { return analytic.cdf(x); };
  report.ks_bound = ks_distance(emp_bound, cdf);
  report.ks_exact = ks_distance(emp_exact, cdf);

  const double x_sup = analytic.support_max();
  const double visible = static_cast<double>(emp_exact.size());
  report.grid.reserve(scenario.grid_points);
  for (std::size_t k = 0; k < scenario.grid_points; ++k) {
    const double x =
        x_sup * static_cast<double>(k) / static_cast<double>(scenario.grid_points - 1);
    ComparisonRow row{x, analytic.cdf(x), emp_exact(x), emp_bound(x)};
    const double se = std::sqrt(row.cdf_analytic * (1.0 - row.cdf_analytic) / visible);
    if (row.cdf_analytic > row.cdf_emp_exact + 3.0 * se) ++report.dominance_violations;
    report.grid.push_back(row);
  }
  return report;
}

void write_report_csv(std::ostream& out, const ComparisonReport& report) {
  out << "x_hz,cdf_analytic,cdf_emp_exact,cdf_emp_bound\n";
  for (const auto& row : report.grid) {
    write_csv_row(out, {row.x_hz, row.cdf_analytic, row.cdf_emp_exact, row.cdf_emp_bound});
  }
}

void write_summary(std::ostream& out, const ComparisonReport& report) {
  out << "ks_bound=" << format_number(report.ks_bound) << '\n'
      << "ks_exact=" << format_number(report.ks_exact) << '\n'
      << "violations=" << report.dominance_violations << '\n'
      << "excluded=" << report.excluded << '\n';
}

}  // namespace leodoppler
