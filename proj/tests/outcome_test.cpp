#include <gtest/gtest.h>

#include "qec/outcome.hpp"

using qec::OutcomeDistribution;
using qec::total_variation_distance;

TEST(OutcomeDistribution, ExactRequiresNormalization) {
  auto d = OutcomeDistribution::exact({{"00", 0.5}, {"11", 0.5}});
  EXPECT_FALSE(d.shots.has_value());
  EXPECT_DOUBLE_EQ(d.prob("00"), 0.5);
  EXPECT_DOUBLE_EQ(d.prob("01"), 0.0);
  EXPECT_THROW(OutcomeDistribution::exact({{"0", 0.8}}), qec::Error);
  EXPECT_THROW(OutcomeDistribution::exact({{"0", 1.2}, {"1", -0.2}}),
               qec::Error);
  EXPECT_THROW(OutcomeDistribution::exact({{"0x", 1.0}}), qec::Error);
}

TEST(OutcomeDistribution, FromCountsNormalizesAndKeepsShots) {
  auto d = OutcomeDistribution::from_counts({{"00", 150}, {"11", 50}}, 200);
  ASSERT_TRUE(d.shots.has_value());
  EXPECT_EQ(*d.shots, 200u);
  EXPECT_DOUBLE_EQ(d.prob("00"), 0.75);
  EXPECT_DOUBLE_EQ(d.prob("11"), 0.25);
  EXPECT_THROW(OutcomeDistribution::from_counts({{"0", 3}}, 4),
               std::invalid_argument);
  EXPECT_THROW(OutcomeDistribution::from_counts({}, 0), std::invalid_argument);
}

TEST(OutcomeDistribution, MarginalSumsOverDroppedBits) {
  auto d = OutcomeDistribution::exact(
      {{"000", 0.25}, {"010", 0.25}, {"011", 0.1}, {"110", 0.4}});
  auto m = d.marginal(2);
  EXPECT_DOUBLE_EQ(m.prob("00"), 0.25);
  EXPECT_DOUBLE_EQ(m.prob("01"), 0.35);
  EXPECT_DOUBLE_EQ(m.prob("11"), 0.4);
  auto first = d.marginal(1);
  EXPECT_DOUBLE_EQ(first.prob("0"), 0.6);
  EXPECT_DOUBLE_EQ(first.prob("1"), 0.4);
  EXPECT_THROW(d.marginal(4), std::invalid_argument);
}

TEST(OutcomeDistribution, MarginalKeepsShotsMetadata) {
  auto d = OutcomeDistribution::from_counts({{"01", 5}, {"00", 5}}, 10);
  EXPECT_EQ(*d.marginal(1).shots, 10u);
}

TEST(TotalVariationDistance, KnownValues) {
  auto a = OutcomeDistribution::exact({{"0", 0.5}, {"1", 0.5}});
  auto b = OutcomeDistribution::exact({{"0", 0.75}, {"1", 0.25}});
  EXPECT_NEAR(total_variation_distance(a, b), 0.25, 1e-15);
  EXPECT_NEAR(total_variation_distance(a, a), 0.0, 1e-15);

  auto c = OutcomeDistribution::exact({{"00", 1.0}});
  auto d = OutcomeDistribution::exact({{"11", 1.0}});
  EXPECT_NEAR(total_variation_distance(c, d), 1.0, 1e-15);
}

TEST(TotalVariationDistance, HandlesDisjointSupport) {
  auto a = OutcomeDistribution::exact({{"00", 0.6}, {"01", 0.4}});
  auto b = OutcomeDistribution::exact({{"10", 0.6}, {"01", 0.4}});
  EXPECT_NEAR(total_variation_distance(a, b), 0.6, 1e-15);
}
