#include <doctest.h>

#include <cmath>
#include <limits>

#include "crowdflow/types.hpp"

using namespace crowdflow;

TEST_CASE("Point rejects non-finite coordinates") {
  CHECK_THROWS_AS(Point(std::nan(""), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Point(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK_NOTHROW(Point(-1.5, 2.5));
}

TEST_CASE("FrameDims rejects zero dimensions") {
  CHECK_THROWS_AS(FrameDims(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(FrameDims(0, 1), std::invalid_argument);
  CHECK_NOTHROW(FrameDims(1, 1));
}

TEST_CASE("frame_diagonal") {
  CHECK(frame_diagonal(FrameDims(3, 4)) == doctest::Approx(5.0).epsilon(1e-15));
  // The working resolution used throughout the docs.
  CHECK(frame_diagonal(FrameDims(640, 512)) ==
        doctest::Approx(std::sqrt(640.0 * 640.0 + 512.0 * 512.0)).epsilon(1e-15));
}

TEST_CASE("FrameAnnotations validates head bounds") {
  const FrameDims dims(10, 10);
  CHECK_NOTHROW(FrameAnnotations(0, {Point(0, 0), Point(9.5, 9.5)}, dims));
  CHECK_THROWS_WITH_AS(FrameAnnotations(0, {Point(0, 0), Point(10, 5)}, dims),
                       doctest::Contains("head 1"), std::invalid_argument);
  CHECK_THROWS_AS(FrameAnnotations(0, {Point(-0.1, 5)}, dims), std::invalid_argument);
}

TEST_CASE("DensityMap shape invariant") {
  const FrameDims dims(4, 3);
  CHECK_NOTHROW(DensityMap(dims, Grid::Zero(3, 4), MapKind::Crowd));
  CHECK_THROWS_AS(DensityMap(dims, Grid::Zero(4, 3), MapKind::Crowd),
                  std::invalid_argument);
}

TEST_CASE("CentroidSet rejects duplicates") {
  CHECK_THROWS_AS(CentroidSet(0, {Point(1, 2), Point(1, 2)}), std::invalid_argument);
  CHECK_NOTHROW(CentroidSet(0, {Point(1, 2), Point(1, 2.0000001)}));
}

TEST_CASE("FlowResult allows at most one unmatched side") {
  CHECK_THROWS_AS(FlowResult(0, 1, {}, {Point(1, 1)}, {Point(2, 2)}),
                  std::invalid_argument);
  CHECK_NOTHROW(FlowResult(0, 1, {}, {Point(1, 1)}, {}));
  CHECK_NOTHROW(FlowResult(0, 1, {}, {}, {}));
}

TEST_CASE("direction names round-trip") {
  for (Direction d : {Direction::N, Direction::NE, Direction::E, Direction::SE,
                      Direction::S, Direction::SW, Direction::W, Direction::NW,
                      Direction::Stationary})
    CHECK(direction_from_name(direction_name(d)) == d);
  CHECK(direction_name(Direction::Stationary) == "STATIONARY");
  CHECK_THROWS_AS(direction_from_name("NNE"), std::invalid_argument);
}
