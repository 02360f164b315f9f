#include "crowdflow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace crowdflow {

Direction classify_direction(double dx, double dy, const MatchConfig& config) {
  if (!std::isfinite(dx) || !std::isfinite(dy))
    throw std::invalid_argument("classify_direction: displacement must be finite");
  if (!(config.stationary_eps >= 0.0))
    throw std::invalid_argument("classify_direction: stationary_eps must be >= 0");

  if (std::hypot(dx, dy) <= config.stationary_eps) return Direction::Stationary;

  // y grows downward, so negate dy to get compass angles (North = +90 deg).
  const double theta = std::atan2(-dy, dx) * 180.0 / std::numbers::pi;
  static constexpr Direction kSectors[8] = {Direction::E,  Direction::NE,
                                            Direction::N,  Direction::NW,
                                            Direction::W,  Direction::SW,
                                            Direction::S,  Direction::SE};
  const auto raw = static_cast<long>(std::floor((theta + 22.5) / 45.0));
  return kSectors[((raw % 8) + 8) % 8];
}

FlowResult match_centroids(const CentroidSet& p0, const CentroidSet& pk,
                           const MatchConfig& config) {
  const auto& a = p0.centroids;
  const auto& b = pk.centroids;

  struct Pair {
    double dist;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      pairs.push_back({distance(a[i], b[j]), i, j});

  std::sort(pairs.begin(), pairs.end(), [&](const Pair& lhs, const Pair& rhs) {
    if (lhs.dist != rhs.dist) return lhs.dist < rhs.dist;
    if (a[lhs.i] != a[rhs.i]) return yx_less(a[lhs.i], a[rhs.i]);
    return yx_less(b[lhs.j], b[rhs.j]);
  });

  const std::size_t want = std::min(a.size(), b.size());
  std::vector<bool> used_a(a.size(), false), used_b(b.size(), false);
  std::vector<FlowMatch> matches;
  matches.reserve(want);
  for (const Pair& p : pairs) {
    if (matches.size() == want) break;
    if (used_a[p.i] || used_b[p.j]) continue;
    used_a[p.i] = true;
    used_b[p.j] = true;
    const double dx = b[p.j].x - a[p.i].x;
    const double dy = b[p.j].y - a[p.i].y;
    matches.push_back({a[p.i], b[p.j], dx, dy, std::hypot(dx, dy),
                       classify_direction(dx, dy, config)});
  }

  std::vector<Point> unmatched_start, unmatched_end;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!used_a[i]) unmatched_start.push_back(a[i]);
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!used_b[j]) unmatched_end.push_back(b[j]);

  return FlowResult(p0.frame_id, pk.frame_id, std::move(matches),
                    std::move(unmatched_start), std::move(unmatched_end));
}

FlowResult detect_flow(const DensityMap& map0, const DensityMap& mapk,
                       const ExtractionConfig& extraction, const MatchConfig& matching,
                       std::uint64_t t0, std::uint64_t tk) {
  if (!(map0.dims == mapk.dims))
    throw std::invalid_argument("detect_flow: maps have different dims");
  return match_centroids(extract_centroids(map0, extraction, t0),
                         extract_centroids(mapk, extraction, tk), matching);
}

}  // namespace crowdflow
