#pragma once

#include "crowdflow/types.hpp"

namespace crowdflow {

enum class Connectivity : std::uint8_t { Four = 4, Eight = 8 };

/// Heatmap-to-centroids parameters. tau is the background threshold applied
/// after min-max normalization; components smaller than min_area pixels are
/// discarded (noise speckles in predicted maps — ground-truth maps never
/// need it).
struct ExtractionConfig {
  double tau = 1.0 / 3.0;
  std::uint32_t min_area = 4;
  Connectivity connectivity = Connectivity::Eight;
};

/// Affine rescale of the cells to [0, 1]. A constant map has no localization
/// signal and maps to all zeros.
DensityMap normalize_minmax(const DensityMap& map);

/// Cells below tau become 0; cells at or above keep their value. Expects
/// cells in [0, 1]; throws if tau is outside [0, 1].
DensityMap threshold_map(const DensityMap& map, double tau);

/// normalize -> threshold -> connected components of strictly positive cells
/// -> intensity-weighted center of mass per surviving component. Centroids
/// are ordered by descending component mass, ties by ascending (y, x).
/// An empty result is valid; this never throws on map content.
CentroidSet extract_centroids(const DensityMap& map, const ExtractionConfig& config,
                              std::uint64_t frame_id);

}  // namespace crowdflow
