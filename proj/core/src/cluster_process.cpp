#include "leodoppler/cluster_process.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>

#include "leodoppler/csv.hpp"
#include "leodoppler/errors.hpp"

namespace leodoppler {

namespace {

PlanarPoint uniform_in_disk(PlanarPoint center, double radius, StreamRng& rng) {
  const double r = radius * std::sqrt(rng.uniform());
  const double angle = 2.0 * std::numbers::pi * rng.uniform();
  return {center.x + r * std::cos(angle), center.y + r * std::sin(angle)};
}

}  // namespace

void CellModel::validate() const {
  if (!(cluster_radius_m > 0.0)) throw ValidationError("CellModel: rho must be > 0");
  if (!(cluster_radius_m <= cell_radius_m)) {
    throw ValidationError("CellModel: rho must be <= R_cell");
  }
  if (!(parent_density > 0.0)) throw ValidationError("CellModel: lambda_c must be > 0");
  if (users_per_cluster < 1) throw ValidationError("CellModel: N must be >= 1");
}

double CellModel::mean_parent_count() const {
  return parent_density * std::numbers::pi * cell_radius_m * cell_radius_m;
}

ClusterSample sample_uniform_disk(PlanarPoint center, double rho, std::size_t n,
                                  StreamRng& rng) {
  if (!(rho > 0.0)) throw DomainError("sample_uniform_disk: rho must be > 0");
  if (n < 1) throw DomainError("sample_uniform_disk: N must be >= 1");
  ClusterSample out{center, {}};
  out.users.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.users.push_back(uniform_in_disk(center, rho, rng));
  return out;
}

std::vector<ClusterSample> sample_cell(const CellModel& model, StreamRng& rng) {
  model.validate();
  std::poisson_distribution<std::uint64_t> parents(model.mean_parent_count());
  const std::uint64_t count = parents(rng);
  std::vector<ClusterSample> clusters;
  clusters.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const PlanarPoint head = uniform_in_disk({0.0, 0.0}, model.cell_radius_m, rng);
    clusters.push_back(
        sample_uniform_disk(head, model.cluster_radius_m, model.users_per_cluster, rng));
  }
  return clusters;
}

std::vector<double> distances_to_point(const ClusterSample& sample, PlanarPoint q) {
  std::vector<double> out;
  out.reserve(sample.users.size());
  for (const auto& u : sample.users) out.push_back(distance(u, q));
  return out;
}

void write_samples_csv(std::ostream& out, std::span<const ClusterSample> clusters) {
  out << "cluster_id,user_id,x_m,y_m\n";
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& users = clusters[c].users;
    for (std::size_t u = 0; u < users.size(); ++u) {
      out << c << ',' << u << ',' << format_number(users[u].x) << ','
          << format_number(users[u].y) << '\n';
    }
  }
}

}  // namespace leodoppler
