#include <gtest/gtest.h>

#include <set>

#include "qec/rng.hpp"

using qec::ShotRng;

TEST(ShotRng, UniformStaysInHalfOpenUnitInterval) {
  ShotRng rng = ShotRng::for_shot(42, 0);
  for (int i = 0; i < 100000; ++i) {
    double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(ShotRng, SameSeedAndShotReproducesTheStream) {
  ShotRng a = ShotRng::for_shot(123, 17);
  ShotRng b = ShotRng::for_shot(123, 17);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.bits(), b.bits());
}

TEST(ShotRng, DifferentShotsGiveDifferentStreams) {
  ShotRng a = ShotRng::for_shot(123, 0);
  ShotRng b = ShotRng::for_shot(123, 1);
  int differing = 0;
  for (int i = 0; i < 64; ++i) differing += (a.bits() != b.bits());
  EXPECT_GT(differing, 60);
}

TEST(ShotRng, DifferentSeedsGiveDifferentStreams) {
  ShotRng a = ShotRng::for_shot(1, 5);
  ShotRng b = ShotRng::for_shot(2, 5);
  int differing = 0;
  for (int i = 0; i < 64; ++i) differing += (a.bits() != b.bits());
  EXPECT_GT(differing, 60);
}

TEST(ShotRng, StreamsForNearbyShotsLookUncorrelated) {
  std::set<std::uint64_t> first_draws;
  for (std::uint64_t shot = 0; shot < 1000; ++shot)
    first_draws.insert(ShotRng::for_shot(7, shot).bits());
  EXPECT_EQ(first_draws.size(), 1000u);
}

TEST(ShotRng, UniformMeanIsCloseToHalf) {
  ShotRng rng = ShotRng::for_shot(99, 3);
  double sum = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) sum += rng.uniform();
  EXPECT_NEAR(sum / n, 0.5, 0.005);
}
