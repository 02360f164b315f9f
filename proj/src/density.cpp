#include "crowdflow/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace crowdflow {

Kernel2D gaussian_kernel(const DensityConfig& config) {
  if (!(config.sigma > 0.0) || !std::isfinite(config.sigma))
    throw std::invalid_argument("gaussian_kernel: sigma must be positive");
  if (!(config.truncate > 0.0) || !std::isfinite(config.truncate))
    throw std::invalid_argument("gaussian_kernel: truncate must be positive");

  const double radius_f = std::ceil(config.truncate * config.sigma);
  if (radius_f > static_cast<double>(std::numeric_limits<std::uint32_t>::max()))
    throw std::invalid_argument("gaussian_kernel: radius overflows u32");
  const auto radius = static_cast<std::uint32_t>(radius_f);

  const Eigen::Index side = 2 * static_cast<Eigen::Index>(radius) + 1;
  const double inv_two_sigma_sq = 1.0 / (2.0 * config.sigma * config.sigma);

  Grid weights(side, side);
  for (Eigen::Index row = 0; row < side; ++row) {
    const double v = static_cast<double>(row) - radius;
    for (Eigen::Index col = 0; col < side; ++col) {
      const double u = static_cast<double>(col) - radius;
      weights(row, col) = std::exp(-(u * u + v * v) * inv_two_sigma_sq);
    }
  }
  weights /= weights.sum();
  return {radius, std::move(weights)};
}

DensityMap synthesize_map(std::span<const Point> points, FrameDims dims,
                          const Kernel2D& kernel, MapKind kind) {
  Grid values = Grid::Zero(dims.height, dims.width);
  const auto r = static_cast<std::int64_t>(kernel.radius);
  const auto width = static_cast<std::int64_t>(dims.width);
  const auto height = static_cast<std::int64_t>(dims.height);

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!dims.contains(points[i]))
      throw std::invalid_argument("synthesize_map: point " + std::to_string(i) +
                                  " outside frame bounds");
    const std::int64_t cx = std::llround(points[i].x);
    const std::int64_t cy = std::llround(points[i].y);

    // Overlap of the stamp rectangle with the frame; clipped rows/cols drop.
    const std::int64_t x0 = std::max<std::int64_t>(0, cx - r);
    const std::int64_t x1 = std::min<std::int64_t>(width - 1, cx + r);
    const std::int64_t y0 = std::max<std::int64_t>(0, cy - r);
    const std::int64_t y1 = std::min<std::int64_t>(height - 1, cy + r);
    if (x0 > x1 || y0 > y1) continue;

    values.block(y0, x0, y1 - y0 + 1, x1 - x0 + 1) +=
        kernel.weights.block(y0 - (cy - r), x0 - (cx - r), y1 - y0 + 1, x1 - x0 + 1);
  }
  return DensityMap(dims, std::move(values), kind);
}

DensityMap synthesize_map(std::span<const Point> points, FrameDims dims,
                          const DensityConfig& config, MapKind kind) {
  return synthesize_map(points, dims, gaussian_kernel(config), kind);
}

}  // namespace crowdflow
