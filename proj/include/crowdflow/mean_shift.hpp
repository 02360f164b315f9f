#pragma once

#include <optional>
#include <span>
#include <vector>

#include "crowdflow/types.hpp"

namespace crowdflow {

/// Flat-kernel Mean Shift configuration, mirroring the reference library's
/// defaults. When bandwidth is absent it is estimated from the data.
struct MeanShiftConfig {
  std::optional<double> bandwidth;
  double quantile = 0.3;
  std::uint32_t max_iterations = 300;
  double convergence_tol_factor = 1e-3;  // stop threshold = factor * bandwidth
};

struct ClusteringResult {
  CentroidSet modes;                 // deduplicated, support-ordered
  std::vector<std::uint32_t> labels; // per input point, nearest mode index
  double bandwidth;                  // the resolved (given or estimated) value
};

/// k-th nearest-neighbor bandwidth estimate with k = max(1, floor(n * quantile)).
/// The point itself counts as neighbor 1 at distance 0, matching the reference
/// estimator. Requires at least two points.
double estimate_bandwidth(std::span<const Point> points, double quantile);

/// Flat-kernel Mean Shift seeded at every input point. Each seed moves to the
/// arithmetic mean of the points within the closed bandwidth ball until the
/// step falls below convergence_tol_factor * bandwidth or max_iterations.
/// Converged candidates are ordered by descending in-ball support (ties by
/// ascending (y, x)) and a candidate is kept only if no kept mode lies within
/// bandwidth. Every input point is labeled by its nearest kept mode.
ClusteringResult mean_shift_cluster(std::span<const Point> points,
                                    const MeanShiftConfig& config,
                                    std::uint64_t frame_id = 0);

}  // namespace crowdflow
