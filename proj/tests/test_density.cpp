#include <doctest.h>

#include <cmath>
#include <numbers>

#include "crowdflow/density.hpp"
#include "crowdflow/rng.hpp"

using namespace crowdflow;

TEST_CASE("gaussian_kernel geometry and normalization") {
  const Kernel2D k = gaussian_kernel({.sigma = 10.0, .truncate = 4.0});
  CHECK(k.radius == 40);
  CHECK(k.weights.rows() == 81);
  CHECK(k.weights.cols() == 81);
  CHECK(std::abs(k.weights.sum() - 1.0) <= 1e-12);

  // Discrete center weight stays within 1% of the continuous 1/(2 pi sigma^2).
  const double analytic = 1.0 / (2.0 * std::numbers::pi * 100.0);
  CHECK(std::abs(k.weights(40, 40) - analytic) / analytic < 0.01);

  // Flip symmetry.
  CHECK((k.weights - k.weights.rowwise().reverse()).abs().maxCoeff() == 0.0);
  CHECK((k.weights - k.weights.colwise().reverse()).abs().maxCoeff() == 0.0);
}

TEST_CASE("gaussian_kernel near-delta at tiny sigma") {
  const Kernel2D k = gaussian_kernel({.sigma = 0.1, .truncate = 4.0});
  CHECK(k.radius == 1);
  CHECK(k.weights(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("gaussian_kernel rejects bad configs") {
  CHECK_THROWS_AS(gaussian_kernel({.sigma = 0.0, .truncate = 4.0}), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_kernel({.sigma = -1.0, .truncate = 4.0}), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_kernel({.sigma = 10.0, .truncate = 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(gaussian_kernel({.sigma = 5e9, .truncate = 1.0}), std::invalid_argument);
}

TEST_CASE("unit mass for one interior point") {
  const FrameDims dims(640, 512);
  const DensityMap map = synthesize_map(std::vector<Point>{Point(320, 256)}, dims,
                                        DensityConfig{}, MapKind::Centroid);
  CHECK(map.kind == MapKind::Centroid);
  CHECK(std::abs(map.values.sum() - 1.0) <= 1e-6);
  CHECK(map.values.minCoeff() >= 0.0);
}

TEST_CASE("five interior points carry mass five") {
  const FrameDims dims(640, 512);
  const std::vector<Point> pts = {Point(100, 100), Point(200, 128), Point(320, 256),
                                  Point(460, 300), Point(590, 460)};
  const DensityMap map = synthesize_map(pts, dims, DensityConfig{}, MapKind::Crowd);
  CHECK(std::abs(map.values.sum() - 5.0) <= 1e-6);
}

TEST_CASE("corner stamp keeps exactly the kernel quadrant") {
  const FrameDims dims(640, 512);
  const Kernel2D k = gaussian_kernel(DensityConfig{});
  const DensityMap map =
      synthesize_map(std::vector<Point>{Point(0, 0)}, dims, k, MapKind::Centroid);

  // Independent oracle: sum the surviving quadrant of the built kernel.
  const double quadrant =
      k.weights.block(k.radius, k.radius, k.radius + 1, k.radius + 1).sum();
  CHECK(std::abs(map.values.sum() - quadrant) <= 1e-12);
  CHECK(map.values.sum() > 0.25);
  CHECK(map.values.sum() < 0.28);
}

TEST_CASE("out-of-bounds point names its index") {
  const FrameDims dims(64, 64);
  const std::vector<Point> pts = {Point(10, 10), Point(64, 10)};
  CHECK_THROWS_WITH_AS(synthesize_map(pts, dims, DensityConfig{}, MapKind::Crowd),
                       doctest::Contains("point 1"), std::invalid_argument);
}

TEST_CASE("linearity: map(A union B) = map(A) + map(B)") {
  const FrameDims dims(200, 150);
  SeededRng rng(99);
  std::vector<Point> a, b, both;
  for (int i = 0; i < 7; ++i) a.emplace_back(rng.uniform(0, 200), rng.uniform(0, 150));
  for (int i = 0; i < 5; ++i) b.emplace_back(rng.uniform(0, 200), rng.uniform(0, 150));
  both = a;
  both.insert(both.end(), b.begin(), b.end());

  const DensityConfig config{.sigma = 4.0, .truncate = 4.0};
  const DensityMap ma = synthesize_map(a, dims, config, MapKind::Crowd);
  const DensityMap mb = synthesize_map(b, dims, config, MapKind::Crowd);
  const DensityMap mab = synthesize_map(both, dims, config, MapKind::Crowd);
  CHECK((mab.values - ma.values - mb.values).abs().maxCoeff() <= 1e-12);
}

TEST_CASE("integer translation shifts interior maps exactly") {
  const FrameDims dims(300, 300);
  const DensityConfig config{.sigma = 5.0, .truncate = 4.0};
  const std::vector<Point> pts = {Point(100.3, 120.8), Point(140.0, 95.5)};
  std::vector<Point> shifted;
  const int sx = 17, sy = -9;
  for (const Point& p : pts) shifted.emplace_back(p.x + sx, p.y + sy);

  const DensityMap base = synthesize_map(pts, dims, config, MapKind::Crowd);
  const DensityMap moved = synthesize_map(shifted, dims, config, MapKind::Crowd);
  bool equal = true;
  for (int y = 0; y < 300; ++y) {
    for (int x = 0; x < 300; ++x) {
      const int ox = x - sx, oy = y - sy;
      const double expect =
          (ox >= 0 && ox < 300 && oy >= 0 && oy < 300) ? base.values(oy, ox) : 0.0;
      equal &= (moved.values(y, x) == expect);
    }
  }
  CHECK(equal);
}

TEST_CASE("mass conservation over random interior scatter") {
  const FrameDims dims(640, 512);
  const Kernel2D k = gaussian_kernel(DensityConfig{});
  SeededRng rng(2024);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 50);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i)
      pts.emplace_back(rng.uniform(40, 599), rng.uniform(40, 471));
    const DensityMap map = synthesize_map(pts, dims, k, MapKind::Crowd);
    CHECK(std::abs(map.values.sum() - n) <= 1e-6 * n);
  }
}
