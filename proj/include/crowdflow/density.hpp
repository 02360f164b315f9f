#pragma once

#include <span>

#include "crowdflow/types.hpp"

namespace crowdflow {

/// Gaussian stamp parameters. sigma is the kernel width in pixels, truncate
/// the kernel radius in multiples of sigma.
struct DensityConfig {
  double sigma = 10.0;
  double truncate = 4.0;
};

/// Discrete unit-sum Gaussian kernel of side 2*radius+1, symmetric under
/// horizontal and vertical flips.
struct Kernel2D {
  std::uint32_t radius;
  Grid weights;
};

/// Builds the discrete kernel: radius = ceil(truncate * sigma), weight at
/// offset (u, v) proportional to exp(-(u^2+v^2)/(2 sigma^2)), renormalized to
/// unit sum so a fully interior stamp deposits mass exactly 1.
Kernel2D gaussian_kernel(const DensityConfig& config);

/// Sums one kernel stamp per point, each centered at the nearest integer
/// pixel, clipping at the frame borders (clipped mass is dropped, not
/// renormalized). Throws if any point lies outside the frame.
DensityMap synthesize_map(std::span<const Point> points, FrameDims dims,
                          const Kernel2D& kernel, MapKind kind);
DensityMap synthesize_map(std::span<const Point> points, FrameDims dims,
                          const DensityConfig& config, MapKind kind);

}  // namespace crowdflow
