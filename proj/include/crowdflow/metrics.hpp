#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crowdflow/types.hpp"

namespace crowdflow {

/// Patch-sampling parameters for MPPR: n_p random patches of patch_w x patch_h
/// pixels per frame, drawn from the deterministic generator seeded by `seed`.
struct MpprConfig {
  std::uint32_t n_p = 1000;
  std::uint32_t patch_w = 150;
  std::uint32_t patch_h = 150;
  std::uint64_t seed = 0;
};

/// Per-frame patch tallies. precision is present iff tp+fp > 0, recall iff
/// tp+fn > 0.
struct MpprTally {
  std::uint32_t tp = 0;
  std::uint32_t tn = 0;
  std::uint32_t fp = 0;
  std::uint32_t fn = 0;
  std::optional<double> precision;
  std::optional<double> recall;
};

enum class PatchOutcome : std::uint8_t {
  TruePositive,
  TrueNegative,
  FalsePositive,
  FalseNegative,
};

/// Mean Coordinate Matching Error: mean Euclidean distance over the union of
/// the two symmetric nearest-neighbor pairings (each predicted centroid to
/// its nearest ground-truth one, and vice versa; duplicate pairs counted
/// once; nearest ties broken by ascending (y, x)). Throws on empty sets.
double mcme(const CentroidSet& pred, const CentroidSet& gt);

/// MCME divided by the frame diagonal, the maximum possible single-pair error.
double normalized_mcme(const CentroidSet& pred, const CentroidSet& gt, FrameDims dims);

/// The n_p patch anchor points H(x, y), uniform over [0, width) x [0, height),
/// x drawn before y for each sample. Exposed so tests can replay the exact
/// patch sequence.
std::vector<Point> sample_patch_origins(FrameDims dims, std::uint32_t n_p,
                                        std::uint64_t seed);

/// Per-sample TP/TN/FP/FN decisions. Each patch is the box
/// [x, x+w) x [y, y+h) clipped to the frame; a box is active for a set iff at
/// least one of its centroids lies inside the clipped box.
std::vector<PatchOutcome> classify_patches(const CentroidSet& gt, const CentroidSet& pred,
                                           FrameDims dims, const MpprConfig& config);

/// Folds classify_patches into counts and derived precision/recall.
MpprTally mppr_frame(const CentroidSet& gt, const CentroidSet& pred, FrameDims dims,
                     const MpprConfig& config);

struct SequenceMppr {
  double precision;
  double recall;
};

/// Unweighted means of the defined per-frame precisions and recalls; frame i
/// uses seed config.seed + i. Throws when no frame defines one of the values.
SequenceMppr mppr_sequence(std::span<const std::pair<CentroidSet, CentroidSet>> frames,
                           FrameDims dims, const MpprConfig& config);

/// Probability that a sampled patch lies fully inside the frame:
/// max(0, l_x - w) * max(0, l_y - h) / (l_x * l_y).
double containment_probability(FrameDims dims, std::uint32_t w, std::uint32_t h);

/// Mean over cells of the squared difference. Throws if dims differ.
double map_mse(const DensityMap& a, const DensityMap& b);

}  // namespace crowdflow
