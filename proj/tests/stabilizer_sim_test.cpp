#include <gtest/gtest.h>

#include <random>

#include "qec/circuit_io.hpp"
#include "qec/dense_sim.hpp"
#include "qec/stabilizer_sim.hpp"
#include "testutil.hpp"

using namespace qec;

TEST(RunStabilizer, NoiselessGhzSplitsEvenly) {
  auto dist = run_stabilizer(ghz_benchmark(5), std::nullopt, 2000);
  ASSERT_TRUE(dist.shots.has_value());
  EXPECT_EQ(dist.probabilities.size(), 2u);
  EXPECT_NEAR(dist.prob("00000"), 0.5, 0.05);
  EXPECT_NEAR(dist.prob("11111"), 0.5, 0.05);
}

TEST(RunStabilizer, HandlesHundredsOfQubits) {
  auto dist = run_stabilizer(ghz_benchmark(200), std::nullopt, 200);
  EXPECT_NEAR(dist.prob(std::string(200, '0')) +
                  dist.prob(std::string(200, '1')),
              1.0, 1e-12);
}

TEST(RunStabilizer, RejectsNonCliffordCircuitsAndDampingNoise) {
  Circuit c(1, 1);
  c.t(0).measure(0, 0);
  EXPECT_THROW(run_stabilizer(c, std::nullopt, 10), UnsupportedGateError);
  try {
    run_stabilizer(c, std::nullopt, 10);
  } catch (const UnsupportedGateError& e) {
    EXPECT_NE(std::string(e.what()).find("'t'"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("run_density"), std::string::npos);
  }

  NoiseModel nm{{ChannelKind::AmplitudeDamping, 0.1}, 0, true};
  EXPECT_THROW(run_stabilizer(ghz_benchmark(2), nm, 10),
               UnsupportedGateError);
}

TEST(RunStabilizer, AgreesWithDensityOnNoisyGhz) {
  Circuit c = ghz_benchmark(3);
  NoiseModel nm{{ChannelKind::BitFlip, 0.1}, 31, true};
  auto exact = run_density(c, nm);
  auto sampled = run_stabilizer(c, nm, 8000);
  EXPECT_LT(total_variation_distance(exact, sampled), 0.03);
}

TEST(RunStabilizer, ShotIdenticalToTrajectoriesOnCliffordCircuits) {
  std::mt19937_64 rng(2026);
  int nontrivial = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Circuit c = qec::testing::random_circuit(
        rng, 5, 5, 18, true, qec::testing::clifford_gate_kinds());
    for (ChannelKind kind : {ChannelKind::BitFlip, ChannelKind::PhaseFlip,
                             ChannelKind::Depolarizing}) {
      NoiseModel nm{{kind, 0.07}, static_cast<std::uint64_t>(trial), true};
      auto stab = run_stabilizer(c, nm, 40);
      auto traj = run_trajectories(c, nm, 40);
      ASSERT_EQ(stab.probabilities, traj.probabilities)
          << "trial " << trial << " channel " << channel_name(kind) << "\n"
          << serialize(c);
      nontrivial += stab.probabilities.size() > 1;
    }
  }
  EXPECT_GT(nontrivial, 60);
}

TEST(RunStabilizer, ShotIdenticalToTrajectoriesWithFoldedIdentityRuns) {
  Circuit c = pad_dummy_ops(ghz_benchmark(4), 500);
  NoiseModel nm{{ChannelKind::Depolarizing, 0.002}, 8, true};
  auto stab = run_stabilizer(c, nm, 300);
  auto traj = run_trajectories(c, nm, 300);
  EXPECT_EQ(stab.probabilities, traj.probabilities);
}

TEST(RunStabilizer, FoldedIdentityRunsMatchExactDistribution) {
  Circuit c = pad_dummy_ops(ghz_benchmark(2), 60);
  NoiseModel nm{{ChannelKind::BitFlip, 0.01}, 12, true};
  auto exact = run_density(c, nm);
  auto sampled = run_stabilizer(c, nm, 8000);
  EXPECT_LT(total_variation_distance(exact, sampled), 0.03);
}

TEST(RunStabilizer, NoiseExemptOpsAreSkipped) {
  Circuit c(1, 1);
  c.x(0);
  c.ops.back().noise_exempt = true;
  c.measure(0, 0);
  c.ops.back().noise_exempt = true;
  NoiseModel nm{{ChannelKind::BitFlip, 0.5}, 3, true};
  auto dist = run_stabilizer(c, nm, 200);
  EXPECT_NEAR(dist.prob("1"), 1.0, 1e-12);
}

TEST(RunStabilizer, ConditionalsFollowClassicalState) {
  Circuit c(2, 2);
  c.h(0).measure(0, 0);
  Operation fix = Operation::gate(GateKind::X, 1);
  fix.condition = Condition{0, 0, 1, false};
  c.add(fix);
  c.measure(1, 1);
  auto dist = run_stabilizer(c, std::nullopt, 3000);
  EXPECT_NEAR(dist.prob("00") + dist.prob("11"), 1.0, 1e-12);
  EXPECT_NEAR(dist.prob("11"), 0.5, 0.05);
}

TEST(RunStabilizer, ValidatesShotCount) {
  EXPECT_THROW(run_stabilizer(ghz_benchmark(2), std::nullopt, 0),
               std::invalid_argument);
}
