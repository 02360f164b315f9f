#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crowdflow/types.hpp"

namespace crowdflow {

/// One moving group of head dots. Member offsets around the group center are
/// drawn once at birth (isotropic Gaussian, sigma = spread) and recentred to
/// zero mean, so the group moves as a rigid body and its member centroid is
/// analytically the group center. The group exists on frames
/// [birth_frame, death_frame) (unbounded when death_frame is absent).
struct GroupSpec {
  Point center0;
  std::uint32_t members = 1;
  double spread = 0.0;
  double vx = 0.0;  // pixels/frame
  double vy = 0.0;
  std::uint64_t birth_frame = 0;
  std::optional<std::uint64_t> death_frame;
};

struct SceneSpec {
  FrameDims dims;
  std::uint64_t n_frames = 1;
  std::vector<GroupSpec> groups;
  std::uint64_t seed = 0;
};

struct GeneratedSequence {
  std::vector<FrameAnnotations> annotations;  // one per frame, in-frame dots only
  std::vector<CentroidSet> truth_centers;     // per frame: each alive group's
                                              // in-frame member centroid
  std::vector<std::string> warnings;          // e.g. a group never visible
};

/// Deterministic given the spec (seed included). Group center at frame t is
/// center0 + t * velocity; members outside the frame are dropped from that
/// frame's annotations. A group with no in-frame member over its whole
/// lifetime produces a warning, not an error.
GeneratedSequence generate_sequence(const SceneSpec& spec);

}  // namespace crowdflow
