#include "crowdflow/synthetic.hpp"

#include <cmath>
#include <string>

#include "crowdflow/rng.hpp"

namespace crowdflow {

GeneratedSequence generate_sequence(const SceneSpec& spec) {
  if (spec.n_frames < 1)
    throw std::invalid_argument("generate_sequence: n_frames must be >= 1");
  for (std::size_t g = 0; g < spec.groups.size(); ++g) {
    const GroupSpec& group = spec.groups[g];
    if (group.members < 1)
      throw std::invalid_argument("generate_sequence: group " + std::to_string(g) +
                                  " has zero members");
    if (!(group.spread >= 0.0))
      throw std::invalid_argument("generate_sequence: group " + std::to_string(g) +
                                  " has negative spread");
    if (group.death_frame && !(group.birth_frame < *group.death_frame))
      throw std::invalid_argument("generate_sequence: group " + std::to_string(g) +
                                  " dies before it is born");
  }

  // Rigid-body scatter: offsets drawn once per member, recentred to zero mean
  // so the member centroid coincides with the group center.
  SeededRng rng(spec.seed);
  std::vector<std::vector<Point>> offsets(spec.groups.size());
  for (std::size_t g = 0; g < spec.groups.size(); ++g) {
    const GroupSpec& group = spec.groups[g];
    std::vector<std::pair<double, double>> raw(group.members);
    double mean_x = 0.0, mean_y = 0.0;
    for (auto& [ox, oy] : raw) {
      ox = group.spread * rng.normal();
      oy = group.spread * rng.normal();
      mean_x += ox;
      mean_y += oy;
    }
    mean_x /= group.members;
    mean_y /= group.members;
    offsets[g].reserve(group.members);
    for (const auto& [ox, oy] : raw) offsets[g].emplace_back(ox - mean_x, oy - mean_y);
  }

  GeneratedSequence out;
  out.annotations.reserve(spec.n_frames);
  out.truth_centers.reserve(spec.n_frames);
  std::vector<bool> ever_visible(spec.groups.size(), false);

  for (std::uint64_t t = 0; t < spec.n_frames; ++t) {
    std::vector<Point> heads;
    std::vector<Point> centers;
    for (std::size_t g = 0; g < spec.groups.size(); ++g) {
      const GroupSpec& group = spec.groups[g];
      const bool alive =
          t >= group.birth_frame && (!group.death_frame || t < *group.death_frame);
      if (!alive) continue;
      const double cx = group.center0.x + static_cast<double>(t) * group.vx;
      const double cy = group.center0.y + static_cast<double>(t) * group.vy;

      double sum_x = 0.0, sum_y = 0.0;
      std::size_t visible = 0;
      for (const Point& offset : offsets[g]) {
        const Point member(cx + offset.x, cy + offset.y);
        if (!spec.dims.contains(member)) continue;
        heads.push_back(member);
        sum_x += member.x;
        sum_y += member.y;
        ++visible;
      }
      if (visible > 0) {
        ever_visible[g] = true;
        centers.emplace_back(sum_x / static_cast<double>(visible),
                             sum_y / static_cast<double>(visible));
      }
    }
    out.annotations.emplace_back(t, std::move(heads), spec.dims);
    out.truth_centers.emplace_back(t, std::move(centers));
  }

  for (std::size_t g = 0; g < spec.groups.size(); ++g)
    if (!ever_visible[g])
      out.warnings.push_back("group " + std::to_string(g) +
                             " is out of frame for its whole lifetime");
  return out;
}

}  // namespace crowdflow
