#include "crowdflow/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "crowdflow/rng.hpp"

namespace crowdflow {

namespace {

// Index of the nearest point in `candidates`, distance ties broken by
// ascending (y, x) of the candidate.
std::size_t nearest_index(const Point& from, const std::vector<Point>& candidates) {
  std::size_t best = 0;
  double best_dist = distance(from, candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double d = distance(from, candidates[i]);
    if (d < best_dist || (d == best_dist && yx_less(candidates[i], candidates[best]))) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

}  // namespace

double mcme(const CentroidSet& pred, const CentroidSet& gt) {
  if (pred.empty() || gt.empty())
    throw std::invalid_argument("MCME undefined on empty set");

  // Pairs are (pred index, gt index); the union counts duplicates once.
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pred.size(); ++i)
    pairs.emplace(i, nearest_index(pred.centroids[i], gt.centroids));
  for (std::size_t j = 0; j < gt.size(); ++j)
    pairs.emplace(nearest_index(gt.centroids[j], pred.centroids), j);

  double sum = 0.0;
  for (const auto& [i, j] : pairs) sum += distance(pred.centroids[i], gt.centroids[j]);
  return sum / static_cast<double>(pairs.size());
}

double normalized_mcme(const CentroidSet& pred, const CentroidSet& gt, FrameDims dims) {
  return mcme(pred, gt) / frame_diagonal(dims);
}

std::vector<Point> sample_patch_origins(FrameDims dims, std::uint32_t n_p,
                                        std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Point> origins;
  origins.reserve(n_p);
  for (std::uint32_t i = 0; i < n_p; ++i) {
    const double x = rng.next_double() * static_cast<double>(dims.width);
    const double y = rng.next_double() * static_cast<double>(dims.height);
    origins.emplace_back(x, y);
  }
  return origins;
}

namespace {

bool box_active(const CentroidSet& set, double x0, double y0, double x1, double y1) {
  for (const Point& c : set.centroids)
    if (c.x >= x0 && c.x < x1 && c.y >= y0 && c.y < y1) return true;
  return false;
}

}  // namespace

std::vector<PatchOutcome> classify_patches(const CentroidSet& gt, const CentroidSet& pred,
                                           FrameDims dims, const MpprConfig& config) {
  if (config.n_p < 1 || config.patch_w < 1 || config.patch_h < 1)
    throw std::invalid_argument("classify_patches: n_p and patch dims must be >= 1");

  const double lx = static_cast<double>(dims.width);
  const double ly = static_cast<double>(dims.height);
  std::vector<PatchOutcome> outcomes;
  outcomes.reserve(config.n_p);
  for (const Point& h : sample_patch_origins(dims, config.n_p, config.seed)) {
    // Box grows down and to the right from H, clipped to the frame.
    const double x1 = std::min(h.x + static_cast<double>(config.patch_w), lx);
    const double y1 = std::min(h.y + static_cast<double>(config.patch_h), ly);
    const bool gt_active = box_active(gt, h.x, h.y, x1, y1);
    const bool pred_active = box_active(pred, h.x, h.y, x1, y1);
    if (gt_active && pred_active)
      outcomes.push_back(PatchOutcome::TruePositive);
    else if (!gt_active && !pred_active)
      outcomes.push_back(PatchOutcome::TrueNegative);
    else if (pred_active)
      outcomes.push_back(PatchOutcome::FalsePositive);
    else
      outcomes.push_back(PatchOutcome::FalseNegative);
  }
  return outcomes;
}

MpprTally mppr_frame(const CentroidSet& gt, const CentroidSet& pred, FrameDims dims,
                     const MpprConfig& config) {
  MpprTally tally;
  for (const PatchOutcome outcome : classify_patches(gt, pred, dims, config)) {
    switch (outcome) {
      case PatchOutcome::TruePositive: ++tally.tp; break;
      case PatchOutcome::TrueNegative: ++tally.tn; break;
      case PatchOutcome::FalsePositive: ++tally.fp; break;
      case PatchOutcome::FalseNegative: ++tally.fn; break;
    }
  }
  if (tally.tp + tally.fp > 0)
    tally.precision = static_cast<double>(tally.tp) / (tally.tp + tally.fp);
  if (tally.tp + tally.fn > 0)
    tally.recall = static_cast<double>(tally.tp) / (tally.tp + tally.fn);
  return tally;
}

SequenceMppr mppr_sequence(std::span<const std::pair<CentroidSet, CentroidSet>> frames,
                           FrameDims dims, const MpprConfig& config) {
  double precision_sum = 0.0, recall_sum = 0.0;
  std::size_t precision_n = 0, recall_n = 0;
  for (std::size_t i = 0; i < frames.size(); ++i) {
    MpprConfig per_frame = config;
    per_frame.seed = config.seed + static_cast<std::uint64_t>(i);
    const MpprTally tally = mppr_frame(frames[i].first, frames[i].second, dims, per_frame);
    if (tally.precision) {
      precision_sum += *tally.precision;
      ++precision_n;
    }
    if (tally.recall) {
      recall_sum += *tally.recall;
      ++recall_n;
    }
  }
  if (precision_n == 0 || recall_n == 0)
    throw std::runtime_error("mppr_sequence: no frame with a defined value");
  return {precision_sum / static_cast<double>(precision_n),
          recall_sum / static_cast<double>(recall_n)};
}

double containment_probability(FrameDims dims, std::uint32_t w, std::uint32_t h) {
  const double lx = static_cast<double>(dims.width);
  const double ly = static_cast<double>(dims.height);
  const double free_x = std::max(0.0, lx - static_cast<double>(w));
  const double free_y = std::max(0.0, ly - static_cast<double>(h));
  return (free_x * free_y) / (lx * ly);
}

double map_mse(const DensityMap& a, const DensityMap& b) {
  if (!(a.dims == b.dims))
    throw std::invalid_argument("map_mse: maps have different dims");
  return (a.values - b.values).square().mean();
}

}  // namespace crowdflow
