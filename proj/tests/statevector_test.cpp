#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qec/statevector.hpp"

using namespace qec;

namespace {

StateVector random_state(std::mt19937_64& rng, std::uint32_t n) {
  StateVector psi(n);
  std::normal_distribution<double> g(0.0, 1.0);
  double norm2 = 0;
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    psi[i] = {g(rng), g(rng)};
    norm2 += std::norm(psi[i]);
  }
  double s = 1.0 / std::sqrt(norm2);
  for (std::uint64_t i = 0; i < psi.dim(); ++i) psi[i] *= s;
  return psi;
}

double distance(const StateVector& a, const StateVector& b) {
  double d = 0;
  for (std::uint64_t i = 0; i < a.dim(); ++i) d += std::norm(a[i] - b[i]);
  return std::sqrt(d);
}

} // namespace

TEST(StateVector, StartsInAllZeros) {
  StateVector psi(3);
  EXPECT_EQ(psi.dim(), 8u);
  EXPECT_DOUBLE_EQ(psi[0].real(), 1.0);
  EXPECT_DOUBLE_EQ(psi.norm_squared(), 1.0);
  for (std::uint32_t q = 0; q < 3; ++q) EXPECT_DOUBLE_EQ(psi.prob_one(q), 0.0);
}

TEST(StateVector, IndexBitQHoldsQubitQ) {
  StateVector psi(3);
  psi.apply_gate(GateKind::X, 1);
  EXPECT_DOUBLE_EQ(std::norm(psi[2]), 1.0);
  psi.apply_gate(GateKind::X, 2);
  EXPECT_DOUBLE_EQ(std::norm(psi[6]), 1.0);
  EXPECT_DOUBLE_EQ(psi.prob_one(0), 0.0);
  EXPECT_DOUBLE_EQ(psi.prob_one(1), 1.0);
  EXPECT_DOUBLE_EQ(psi.prob_one(2), 1.0);
}

TEST(StateVector, HadamardAndPhaseAlgebra) {
  std::mt19937_64 rng(1);
  StateVector psi = random_state(rng, 4);

  StateVector hh = psi;
  hh.apply_gate(GateKind::H, 2);
  hh.apply_gate(GateKind::H, 2);
  EXPECT_LT(distance(hh, psi), 1e-12);

  StateVector ss = psi, z = psi;
  ss.apply_gate(GateKind::S, 1);
  ss.apply_gate(GateKind::S, 1);
  z.apply_gate(GateKind::Z, 1);
  EXPECT_LT(distance(ss, z), 1e-12);

  StateVector tt = psi, s = psi;
  tt.apply_gate(GateKind::T, 0);
  tt.apply_gate(GateKind::T, 0);
  s.apply_gate(GateKind::S, 0);
  EXPECT_LT(distance(tt, s), 1e-12);

  StateVector sdg = psi;
  sdg.apply_gate(GateKind::S, 3);
  sdg.apply_gate(GateKind::Sdg, 3);
  EXPECT_LT(distance(sdg, psi), 1e-12);

  StateVector hxh = psi, zz = psi;
  hxh.apply_gate(GateKind::H, 1);
  hxh.apply_gate(GateKind::X, 1);
  hxh.apply_gate(GateKind::H, 1);
  zz.apply_gate(GateKind::Z, 1);
  EXPECT_LT(distance(hxh, zz), 1e-12);
}

TEST(StateVector, YHasTheRightPhases) {
  StateVector psi(1);
  psi.apply_gate(GateKind::Y, 0);
  EXPECT_NEAR(psi[1].imag(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(psi[0]), 0.0, 1e-15);
  psi.apply_gate(GateKind::Y, 0);
  EXPECT_NEAR(psi[0].real(), 1.0, 1e-15);

  std::mt19937_64 rng(2);
  StateVector a = random_state(rng, 3);
  StateVector b = a;
  a.apply_gate(GateKind::Y, 1);
  b.apply_matrix(gate_matrix(GateKind::Y), 1);
  EXPECT_LT(distance(a, b), 1e-12);
}

TEST(StateVector, SpecializedKernelsMatchGenericMatrix) {
  std::mt19937_64 rng(3);
  for (GateKind kind : {GateKind::H, GateKind::X, GateKind::Y, GateKind::Z,
                        GateKind::S, GateKind::Sdg, GateKind::T}) {
    StateVector a = random_state(rng, 5);
    StateVector b = a;
    a.apply_gate(kind, 3);
    b.apply_matrix(gate_matrix(kind), 3);
    EXPECT_LT(distance(a, b), 1e-12) << name_of(kind);
  }
}

TEST(StateVector, ControlledGatesOnBasisStates) {
  StateVector psi(2);
  psi.apply_gate(GateKind::CX, 0, 1);
  EXPECT_DOUBLE_EQ(std::norm(psi[0]), 1.0);

  psi.apply_gate(GateKind::X, 0);
  psi.apply_gate(GateKind::CX, 0, 1);
  EXPECT_DOUBLE_EQ(std::norm(psi[3]), 1.0);

  psi.apply_gate(GateKind::CZ, 0, 1);
  EXPECT_NEAR(psi[3].real(), -1.0, 1e-15);

  psi.apply_gate(GateKind::CX, 1, 0);
  EXPECT_DOUBLE_EQ(std::norm(psi[2]), 1.0);
}

TEST(StateVector, BellStateProbabilitiesAndProjection) {
  StateVector psi(2);
  psi.apply_gate(GateKind::H, 0);
  psi.apply_gate(GateKind::CX, 0, 1);
  EXPECT_NEAR(psi.prob_one(0), 0.5, 1e-15);
  EXPECT_NEAR(psi.prob_one(1), 0.5, 1e-15);

  double p1 = psi.prob_one(0);
  psi.project(0, 1, p1);
  EXPECT_NEAR(std::norm(psi[3]), 1.0, 1e-15);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-15);
  EXPECT_NEAR(psi.prob_one(1), 1.0, 1e-15);
}

TEST(StateVector, ProjectRejectsImpossibleOutcomes) {
  StateVector psi(1);
  EXPECT_THROW(psi.project(0, 1, 0.0), Error);
}

TEST(StateVector, PauliApplicationMatchesGates) {
  std::mt19937_64 rng(4);
  StateVector a = random_state(rng, 4);
  StateVector b = a;
  a.apply_pauli(Pauli::X, 2);
  b.apply_gate(GateKind::X, 2);
  EXPECT_LT(distance(a, b), 1e-15);
  a.apply_pauli(Pauli::I, 1);
  EXPECT_LT(distance(a, b), 1e-15);
}

TEST(StateVector, DampingBranchesAreNormalizedAndCorrect) {
  StateVector psi(1);
  psi.apply_gate(GateKind::H, 0);

  StateVector jump = psi;
  double gamma = 0.5;
  double p1 = jump.prob_one(0);
  double p_jump = gamma * p1;
  jump.damp_jump(0, p1);
  EXPECT_NEAR(std::norm(jump[0]), 1.0, 1e-12);
  EXPECT_NEAR(jump.norm_squared(), 1.0, 1e-12);

  StateVector stay = psi;
  stay.damp_nojump(0, gamma, p_jump);
  EXPECT_NEAR(stay.norm_squared(), 1.0, 1e-12);
  // Amplitudes (1, sqrt(1-gamma))/sqrt(2) renormalized by sqrt(1 - gamma/2).
  EXPECT_NEAR(std::norm(stay[0]), 0.5 / 0.75, 1e-12);
  EXPECT_NEAR(std::norm(stay[1]), 0.25 / 0.75, 1e-12);
}

TEST(StateVector, OverlapIsHermitianInner) {
  StateVector zero(1);
  StateVector plus(1);
  plus.apply_gate(GateKind::H, 0);
  auto o = zero.overlap(plus);
  EXPECT_NEAR(o.real(), M_SQRT1_2, 1e-15);
  EXPECT_NEAR(std::abs(plus.overlap(zero) - std::conj(o)), 0.0, 1e-15);
}

TEST(StateVector, RejectsUnitaryMisuseAndHugeRegisters) {
  StateVector psi(1);
  EXPECT_THROW(psi.apply_gate(GateKind::Measure, 0), std::invalid_argument);
  EXPECT_THROW(StateVector(31), CapacityError);
  EXPECT_THROW(gate_matrix(GateKind::CX), std::invalid_argument);
}
