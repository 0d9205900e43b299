#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "leodoppler/orbital_geometry.hpp"
#include "leodoppler/random.hpp"

namespace leodoppler {

/// One spot-beam cell: Poisson cluster heads with a fixed number of
/// uniform-in-disk UEs each.
struct CellModel {
  double cell_radius_m = 0.0;
  double parent_density = 0.0;  // cluster heads per m²
  double cluster_radius_m = 0.0;
  std::size_t users_per_cluster = 1;

  /// Throws ValidationError unless 0 < ρ <= R_cell, λ_c > 0 and N >= 1.
  void validate() const;
  /// λ_c π R_cell².
  double mean_parent_count() const;
};

struct ClusterSample {
  PlanarPoint center;
  std::vector<PlanarPoint> users;
};

/// N points uniform on the disk of radius ρ about `center`, drawn as
/// (ρ sqrt(U₁), 2π U₂) in polar form.
ClusterSample sample_uniform_disk(PlanarPoint center, double rho, std::size_t n, StreamRng& rng);

/// Parent count ~ Poisson(λ_c π R_cell²), parents uniform in the cell disk
/// centered at the origin. Daughters that land outside the cell stay with
/// their parent.
std::vector<ClusterSample> sample_cell(const CellModel& model, StreamRng& rng);

std::vector<double> distances_to_point(const ClusterSample& sample, PlanarPoint q);

/// CSV dump with header `cluster_id,user_id,x_m,y_m`.
void write_samples_csv(std::ostream& out, std::span<const ClusterSample> clusters);

}  // namespace leodoppler
