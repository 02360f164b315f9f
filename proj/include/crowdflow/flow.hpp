#pragma once

#include "crowdflow/extraction.hpp"
#include "crowdflow/types.hpp"

namespace crowdflow {

/// Displacements with norm <= stationary_eps pixels classify as Stationary.
struct MatchConfig {
  double stationary_eps = 5.0;
};

/// Eight 45-degree sectors, half-open [center - 22.5, center + 22.5) with
/// centers E=0, NE=45, N=90, NW=135, W=180, SW=-135, S=-90, SE=-45 degrees,
/// measured as atan2(-dy, dx) so North means decreasing y.
Direction classify_direction(double dx, double dy, const MatchConfig& config);

/// Greedy global-minimum matching: repeatedly take the smallest pairwise
/// Euclidean distance among still-unmatched endpoints (ties by ascending
/// (y, x) of the t0 endpoint, then of the tk endpoint) until min(|P0|, |Pk|)
/// pairs exist. Surplus centroids land in unmatched_start or unmatched_end.
FlowResult match_centroids(const CentroidSet& p0, const CentroidSet& pk,
                           const MatchConfig& config);

/// End-to-end per-pair operation: extract centroids from both maps, then
/// match. Throws if the maps' dims differ.
FlowResult detect_flow(const DensityMap& map0, const DensityMap& mapk,
                       const ExtractionConfig& extraction, const MatchConfig& matching,
                       std::uint64_t t0, std::uint64_t tk);

}  // namespace crowdflow
