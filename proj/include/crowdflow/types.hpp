#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Shared value types for the crowd-flow pipeline. Everything here is an
// immutable value after construction; constructors reject invalid states.

namespace crowdflow {

/// Row-major dense grid, indexed (row, col) = (y, x), top row first.
template <typename Scalar>
using GridT = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Grid = GridT<double>;

/// A 2D pixel position. x grows rightward, y grows downward (image
/// convention), so "North" is decreasing y. Coordinates are continuous:
/// cluster modes and intensity-weighted centroids are sub-pixel.
struct Point {
  double x = 0.0;
  double y = 0.0;

  Point() = default;
  Point(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw std::invalid_argument("Point: coordinates must be finite");
  }

  Eigen::Vector2d vec() const { return {x, y}; }

  friend bool operator==(const Point&, const Point&) = default;
};

/// (y, x) lexicographic order — the deterministic tie-break used throughout.
inline bool yx_less(const Point& a, const Point& b) {
  return a.y < b.y || (a.y == b.y && a.x < b.x);
}

inline double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Frame width/height in pixels, both at least 1.
struct FrameDims {
  std::uint32_t width;
  std::uint32_t height;

  FrameDims(std::uint32_t w, std::uint32_t h) : width(w), height(h) {
    if (w == 0 || h == 0) throw std::invalid_argument("FrameDims: zero dimension");
  }

  bool contains(const Point& p) const {
    return p.x >= 0.0 && p.x < static_cast<double>(width) && p.y >= 0.0 &&
           p.y < static_cast<double>(height);
  }

  friend bool operator==(const FrameDims&, const FrameDims&) = default;
};

/// Diagonal length of the frame, the largest possible single-pair error.
inline double frame_diagonal(FrameDims dims) {
  return std::hypot(static_cast<double>(dims.width), static_cast<double>(dims.height));
}

/// Per-frame head-dot annotations. Every head lies inside the frame.
struct FrameAnnotations {
  std::uint64_t frame_id;
  std::vector<Point> heads;
  FrameDims dims;

  FrameAnnotations(std::uint64_t frame, std::vector<Point> heads_, FrameDims dims_)
      : frame_id(frame), heads(std::move(heads_)), dims(dims_) {
    for (std::size_t i = 0; i < heads.size(); ++i)
      if (!dims.contains(heads[i]))
        throw std::invalid_argument("FrameAnnotations: head " + std::to_string(i) +
                                    " outside frame bounds");
  }
};

enum class MapKind : std::uint8_t { Crowd = 0, Centroid = 1 };

/// A frame-sized grid of non-negative intensities. Holds both centroid
/// density maps and classical crowd density maps; `kind` records which.
struct DensityMap {
  FrameDims dims;
  Grid values;  // values(y, x), dims.height rows by dims.width cols
  MapKind kind;

  DensityMap(FrameDims dims_, Grid values_, MapKind kind_)
      : dims(dims_), values(std::move(values_)), kind(kind_) {
    if (values.rows() != static_cast<Eigen::Index>(dims.height) ||
        values.cols() != static_cast<Eigen::Index>(dims.width))
      throw std::invalid_argument("DensityMap: grid shape does not match dims");
  }

  static DensityMap zeros(FrameDims dims, MapKind kind) {
    return DensityMap(dims, Grid::Zero(dims.height, dims.width), kind);
  }
};

/// Crowd-group centroids for one frame; no two entries are the same point.
struct CentroidSet {
  std::uint64_t frame_id;
  std::vector<Point> centroids;

  CentroidSet(std::uint64_t frame, std::vector<Point> centroids_)
      : frame_id(frame), centroids(std::move(centroids_)) {
    for (std::size_t i = 0; i < centroids.size(); ++i)
      for (std::size_t j = i + 1; j < centroids.size(); ++j)
        if (centroids[i] == centroids[j])
          throw std::invalid_argument("CentroidSet: duplicate centroid");
  }

  std::size_t size() const { return centroids.size(); }
  bool empty() const { return centroids.empty(); }
};

/// Eight compass headings plus the stationary case.
enum class Direction : std::uint8_t { N, NE, E, SE, S, SW, W, NW, Stationary };

std::string_view direction_name(Direction d);
Direction direction_from_name(std::string_view name);

/// One matched centroid pair across a frame gap.
struct FlowMatch {
  Point from;
  Point to;
  double dx = 0.0;
  double dy = 0.0;
  double distance = 0.0;  // always the Euclidean norm of (dx, dy)
  Direction direction = Direction::Stationary;
};

/// Matching outcome for a frame pair. At most one of the unmatched sides is
/// non-empty: the surplus side of the smaller-cardinality scenario.
struct FlowResult {
  std::uint64_t t0_frame;
  std::uint64_t tk_frame;
  std::vector<FlowMatch> matches;
  std::vector<Point> unmatched_start;
  std::vector<Point> unmatched_end;

  FlowResult(std::uint64_t t0, std::uint64_t tk, std::vector<FlowMatch> matches_,
             std::vector<Point> unmatched_start_, std::vector<Point> unmatched_end_)
      : t0_frame(t0),
        tk_frame(tk),
        matches(std::move(matches_)),
        unmatched_start(std::move(unmatched_start_)),
        unmatched_end(std::move(unmatched_end_)) {
    if (!unmatched_start.empty() && !unmatched_end.empty())
      throw std::invalid_argument("FlowResult: both unmatched sides non-empty");
  }
};

}  // namespace crowdflow
