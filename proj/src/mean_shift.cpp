#include "crowdflow/mean_shift.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace crowdflow {

double estimate_bandwidth(std::span<const Point> points, double quantile) {
  const std::size_t n = points.size();
  if (n < 2)
    throw std::invalid_argument("estimate_bandwidth: need at least 2 points");
  if (!(quantile > 0.0) || quantile > 1.0)
    throw std::invalid_argument("estimate_bandwidth: quantile must be in (0, 1]");

  const auto k = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(static_cast<double>(n) * quantile)));

  double sum = 0.0;
  std::vector<double> dists(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) dists[j] = distance(points[i], points[j]);
    // k-th smallest, self included as neighbor 1 at distance 0
    std::nth_element(dists.begin(), dists.begin() + (k - 1), dists.end());
    sum += dists[k - 1];
  }
  return sum / static_cast<double>(n);
}

namespace {

struct Candidate {
  Point mode;
  std::size_t support;
};

// In-ball arithmetic mean (closed ball). Returns the member count.
std::size_t ball_mean(std::span<const Point> points, const Point& center,
                      double bandwidth, Point& mean_out) {
  double sx = 0.0, sy = 0.0;
  std::size_t count = 0;
  for (const Point& p : points) {
    if (distance(p, center) <= bandwidth) {
      sx += p.x;
      sy += p.y;
      ++count;
    }
  }
  if (count > 0)
    mean_out = Point(sx / static_cast<double>(count), sy / static_cast<double>(count));
  return count;
}

}  // namespace

ClusteringResult mean_shift_cluster(std::span<const Point> points,
                                    const MeanShiftConfig& config,
                                    std::uint64_t frame_id) {
  if (points.empty())
    throw std::invalid_argument("mean_shift_cluster: need at least 1 point");
  if (config.bandwidth && !(*config.bandwidth > 0.0))
    throw std::invalid_argument("mean_shift_cluster: bandwidth must be positive");

  // A single point is a fixed point of the update; no bandwidth needed.
  if (points.size() == 1) {
    return {CentroidSet(frame_id, {points[0]}), {0}, config.bandwidth.value_or(0.0)};
  }

  const double bandwidth =
      config.bandwidth ? *config.bandwidth : estimate_bandwidth(points, config.quantile);
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth))
    throw std::runtime_error("mean_shift_cluster: degenerate bandwidth");
  const double stop_threshold = config.convergence_tol_factor * bandwidth;

  // Every input point seeds one trajectory.
  std::vector<Candidate> candidates;
  candidates.reserve(points.size());
  for (const Point& seed : points) {
    Point mean = seed;
    for (std::uint32_t iter = 0;; ++iter) {
      Point next = mean;
      if (ball_mean(points, mean, bandwidth, next) == 0) break;
      const double step = distance(next, mean);
      mean = next;
      if (step < stop_threshold || iter + 1 >= config.max_iterations) break;
    }
    Point unused = mean;
    const std::size_t support = ball_mean(points, mean, bandwidth, unused);
    candidates.push_back({mean, support});
  }

  // Keep the best-supported representative per bandwidth ball.
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     if (a.support != b.support) return a.support > b.support;
                     return yx_less(a.mode, b.mode);
                   });
  std::vector<Point> modes;
  for (const Candidate& c : candidates) {
    bool taken = false;
    for (const Point& m : modes)
      if (distance(c.mode, m) <= bandwidth) {
        taken = true;
        break;
      }
    if (!taken) modes.push_back(c.mode);
  }

  std::vector<std::uint32_t> labels(points.size(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < modes.size(); ++m) {
      const double d = distance(points[i], modes[m]);
      if (d < best) {
        best = d;
        labels[i] = static_cast<std::uint32_t>(m);
      }
    }
  }

  return {CentroidSet(frame_id, std::move(modes)), std::move(labels), bandwidth};
}

}  // namespace crowdflow
