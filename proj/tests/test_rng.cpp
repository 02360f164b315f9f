#include <doctest.h>

#include <cmath>

#include "crowdflow/rng.hpp"

using crowdflow::SeededRng;

TEST_CASE("mt19937_64 stream is the standard-pinned one") {
  // The C++ standard fixes the 10000th output of a default-seeded
  // mt19937_64 engine; our wrapper must expose exactly that stream.
  SeededRng rng(5489u);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next_u64();
  CHECK(v == 9981545732273789042ull);
}

TEST_CASE("uniform doubles live in [0, 1) and reproduce per seed") {
  SeededRng a(42), b(42), c(7);
  bool all_equal = true, any_diff = false;
  for (int i = 0; i < 1000; ++i) {
    const double va = a.next_double();
    all_equal &= (va == b.next_double());
    any_diff |= (va != c.next_double());
    CHECK(va >= 0.0);
    CHECK(va < 1.0);
  }
  CHECK(all_equal);
  CHECK(any_diff);
}

TEST_CASE("normal deviates have roughly standard moments") {
  SeededRng rng(123);
  const int n = 50000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(var - 1.0) < 0.03);
}
