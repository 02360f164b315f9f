#include "crowdflow/extraction.hpp"

#include <algorithm>
#include <vector>

namespace crowdflow {

DensityMap normalize_minmax(const DensityMap& map) {
  const double lo = map.values.minCoeff();
  const double hi = map.values.maxCoeff();
  if (hi == lo) return DensityMap::zeros(map.dims, map.kind);
  return DensityMap(map.dims, ((map.values - lo) / (hi - lo)).eval(), map.kind);
}

DensityMap threshold_map(const DensityMap& map, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::invalid_argument("threshold_map: tau must be in [0, 1]");
  return DensityMap(map.dims, (map.values < tau).select(0.0, map.values).eval(),
                    map.kind);
}

namespace {

struct Component {
  double mass = 0.0;
  double weighted_x = 0.0;
  double weighted_y = 0.0;
  std::uint32_t area = 0;
};

}  // namespace

CentroidSet extract_centroids(const DensityMap& map, const ExtractionConfig& config,
                              std::uint64_t frame_id) {
  const DensityMap cleaned = threshold_map(normalize_minmax(map), config.tau);
  const Grid& g = cleaned.values;
  const Eigen::Index rows = g.rows(), cols = g.cols();

  // Flood-fill labeling of strictly positive cells.
  std::vector<std::int32_t> label(static_cast<std::size_t>(rows * cols), -1);
  auto idx = [cols](Eigen::Index y, Eigen::Index x) {
    return static_cast<std::size_t>(y * cols + x);
  };
  const bool eight = config.connectivity == Connectivity::Eight;

  std::vector<Component> components;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> stack;
  for (Eigen::Index y = 0; y < rows; ++y) {
    for (Eigen::Index x = 0; x < cols; ++x) {
      if (g(y, x) <= 0.0 || label[idx(y, x)] >= 0) continue;
      const auto id = static_cast<std::int32_t>(components.size());
      components.emplace_back();
      Component& comp = components.back();
      stack.clear();
      stack.emplace_back(y, x);
      label[idx(y, x)] = id;
      while (!stack.empty()) {
        auto [cy, cx] = stack.back();
        stack.pop_back();
        const double v = g(cy, cx);
        comp.mass += v;
        comp.weighted_x += v * static_cast<double>(cx);
        comp.weighted_y += v * static_cast<double>(cy);
        comp.area += 1;
        for (Eigen::Index dy = -1; dy <= 1; ++dy) {
          for (Eigen::Index dx = -1; dx <= 1; ++dx) {
            if (dy == 0 && dx == 0) continue;
            if (!eight && dy != 0 && dx != 0) continue;
            const Eigen::Index ny = cy + dy, nx = cx + dx;
            if (ny < 0 || ny >= rows || nx < 0 || nx >= cols) continue;
            if (g(ny, nx) <= 0.0 || label[idx(ny, nx)] >= 0) continue;
            label[idx(ny, nx)] = id;
            stack.emplace_back(ny, nx);
          }
        }
      }
    }
  }

  std::vector<Component> kept;
  for (const Component& c : components)
    if (c.area >= config.min_area) kept.push_back(c);

  std::vector<std::pair<double, Point>> ranked;  // (mass, center of mass)
  ranked.reserve(kept.size());
  for (const Component& c : kept)
    ranked.emplace_back(c.mass, Point(c.weighted_x / c.mass, c.weighted_y / c.mass));
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first > b.first;
                     return yx_less(a.second, b.second);
                   });

  std::vector<Point> centroids;
  centroids.reserve(ranked.size());
  for (const auto& [mass, p] : ranked) {
    // Bit-identical centers of mass from distinct components can only arise
    // in contrived symmetric maps; keep the heavier one so the set invariant
    // holds and extraction stays error-free.
    if (std::find(centroids.begin(), centroids.end(), p) == centroids.end())
      centroids.push_back(p);
  }
  return CentroidSet(frame_id, std::move(centroids));
}

}  // namespace crowdflow
