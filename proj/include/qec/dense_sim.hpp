// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qec/circuit.hpp"
#include "qec/density.hpp"
#include "qec/noise.hpp"
#include "qec/outcome.hpp"
#include "qec/rng.hpp"
#include "qec/sim_common.hpp"
#include "qec/statevector.hpp"

namespace qec {

/// Size guards for the dense backends. The density engine stores 4^n complex
/// doubles and the statevector engines 2^n, so both limits exist to turn an
/// accidental huge allocation into a clear error instead of an OOM kill.
struct SimLimits {
  std::uint32_t density_max_qubits = 10;
  std::uint32_t statevector_max_qubits = 24;
  std::size_t density_branch_cap = 10;
  std::size_t pure_branch_cap = 256;
};

namespace detail {

/// Probability below which a measurement-outcome branch is dropped.
inline constexpr double kBranchPrune = 1e-15;

/// Probability margin within which a measurement outcome is treated as
/// deterministic and consumes no randomness.
inline constexpr double kDeterministicTol = 1e-12;

/// Longest suffix of unconditioned measurements of pairwise-distinct qubits.
/// Those commute with each other, so they can be finalized in one pass over
/// the diagonal instead of splitting branches per measurement.
inline std::size_t terminal_measure_start(const Circuit& c,
                                          const std::vector<ProgStep>& steps) {
  std::size_t start = steps.size();
  std::vector<bool> seen(c.num_qubits, false);
  while (start > 0) {
    const ProgStep& s = steps[start - 1];
    if (s.kind != ProgStep::Kind::Op) break;
    const Operation& op = c.ops[s.op_index];
    if (op.kind != GateKind::Measure || op.condition || seen[op.q0]) break;
    seen[op.q0] = true;
    --start;
  }
  return start;
}

} // namespace detail

/// Noiseless exact simulation on pure states. Measurements split the state
/// into weighted branches; the returned distribution is analytically exact.
inline OutcomeDistribution run_exact_pure(const Circuit& circuit,
                                          const SimLimits& limits = {}) {
  if (circuit.num_qubits > limits.statevector_max_qubits)
    throw CapacityError(
        "circuit needs " + std::to_string(circuit.num_qubits) +
        " qubits but the statevector engine is limited to " +
        std::to_string(limits.statevector_max_qubits));

  struct Branch {
    double weight;
    StateVector psi;
    std::vector<std::uint8_t> clbits;
  };

  auto steps = detail::compile_sampler_program(circuit, false);
  const std::size_t terminal = detail::terminal_measure_start(circuit, steps);

  std::vector<Branch> branches;
  branches.push_back({1.0, StateVector(circuit.num_qubits),
                      std::vector<std::uint8_t>(circuit.num_clbits, 0)});

  for (std::size_t si = 0; si < terminal; ++si) {
    const Operation& op = circuit.ops[steps[si].op_index];
    std::vector<Branch> next;
    for (Branch& br : branches) {
      if (op.condition && !detail::condition_met(*op.condition, br.clbits)) {
        next.push_back(std::move(br));
        continue;
      }
      switch (op.kind) {
      case GateKind::Measure: {
        double p1 = br.psi.prob_one(op.q0);
        for (int bit : {0, 1}) {
          double p = bit ? p1 : 1.0 - p1;
          if (br.weight * p < detail::kBranchPrune) continue;
          Branch out{br.weight * p, br.psi, br.clbits};
          out.psi.project(op.q0, bit, p);
          out.clbits[op.clbit] = static_cast<std::uint8_t>(bit);
          next.push_back(std::move(out));
        }
        break;
      }
      case GateKind::Reset: {
        double p1 = br.psi.prob_one(op.q0);
        for (int bit : {0, 1}) {
          double p = bit ? p1 : 1.0 - p1;
          if (br.weight * p < detail::kBranchPrune) continue;
          Branch out{br.weight * p, br.psi, br.clbits};
          out.psi.project(op.q0, bit, p);
          if (bit) out.psi.apply_gate(GateKind::X, op.q0);
          next.push_back(std::move(out));
        }
        break;
      }
      default:
        br.psi.apply_gate(op.kind, op.q0, op.q1);
        next.push_back(std::move(br));
      }
    }
    branches = std::move(next);
    if (branches.size() > limits.pure_branch_cap)
      throw CapacityError("measurement branch count exceeded the cap of " +
                          std::to_string(limits.pure_branch_cap));
  }

  std::map<std::string, double> probs;
  for (Branch& br : branches) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> reads;
    for (std::size_t si = terminal; si < steps.size(); ++si) {
      const Operation& op = circuit.ops[steps[si].op_index];
      reads.emplace_back(op.q0, op.clbit);
    }
    if (reads.empty()) {
      probs[detail::clbits_to_string(br.clbits)] += br.weight;
      continue;
    }
    for (std::uint64_t idx = 0; idx < br.psi.dim(); ++idx) {
      double p = std::norm(br.psi[idx]);
      if (p * br.weight < detail::kBranchPrune) continue;
      std::vector<std::uint8_t> clbits = br.clbits;
      for (auto [q, cl] : reads)
        clbits[cl] = static_cast<std::uint8_t>((idx >> q) & 1);
      probs[detail::clbits_to_string(clbits)] += br.weight * p;
    }
  }
  return OutcomeDistribution::exact(std::move(probs));
}

/// Exact noise-aware simulation on the density matrix. The channel from the
/// model is applied after every op on every qubit the op touches, except
/// that measurements receive their noise immediately before the readout.
/// Skipped conditional ops receive no noise. Ops marked noise_exempt are
/// simulated without noise.
inline OutcomeDistribution
run_density(const Circuit& circuit,
            const std::optional<NoiseModel>& noise = std::nullopt,
            const SimLimits& limits = {}) {
  if (circuit.num_qubits > limits.density_max_qubits)
    throw CapacityError(
        "circuit needs " + std::to_string(circuit.num_qubits) +
        " qubits but the density engine is limited to " +
        std::to_string(limits.density_max_qubits) +
        " (raise SimLimits::density_max_qubits to override)");
  if (noise) kraus_of(noise->channel);

  struct Branch {
    double weight;
    DensityMatrix rho;
    std::vector<std::uint8_t> clbits;
  };

  auto steps =
      detail::compile_sampler_program(circuit, noise.has_value());
  const std::size_t terminal = detail::terminal_measure_start(circuit, steps);

  std::vector<Branch> branches;
  branches.push_back({1.0, DensityMatrix(circuit.num_qubits),
                      std::vector<std::uint8_t>(circuit.num_clbits, 0)});

  auto apply_noise_to = [&](DensityMatrix& rho, std::uint32_t q,
                            std::uint64_t uses = 1) {
    rho.apply_channel(fold_channel_uses(noise->channel, uses), q);
  };

  for (std::size_t si = 0; si < terminal; ++si) {
    const detail::ProgStep& step = steps[si];
    std::vector<Branch> next;
    for (Branch& br : branches) {
      if (step.kind == detail::ProgStep::Kind::Burst) {
        for (auto [q, uses] : step.burst.uses) apply_noise_to(br.rho, q, uses);
        next.push_back(std::move(br));
        continue;
      }
      const Operation& op = circuit.ops[step.op_index];
      if (op.condition && !detail::condition_met(*op.condition, br.clbits)) {
        next.push_back(std::move(br));
        continue;
      }
      const bool noisy = noise.has_value() && !op.noise_exempt;
      switch (op.kind) {
      case GateKind::Measure: {
        if (noisy && noise->apply_to_measurement)
          apply_noise_to(br.rho, op.q0);
        double p1 = br.rho.prob_one(op.q0);
        for (int bit : {0, 1}) {
          double p = bit ? p1 : 1.0 - p1;
          if (br.weight * p < detail::kBranchPrune) continue;
          Branch out{br.weight * p, br.rho, br.clbits};
          out.rho.project(op.q0, bit, p);
          out.clbits[op.clbit] = static_cast<std::uint8_t>(bit);
          next.push_back(std::move(out));
        }
        break;
      }
      case GateKind::Reset:
        br.rho.reset(op.q0);
        if (noisy) apply_noise_to(br.rho, op.q0);
        next.push_back(std::move(br));
        break;
      default:
        br.rho.apply_gate(op.kind, op.q0, op.q1);
        if (noisy) {
          apply_noise_to(br.rho, op.q0);
          if (arity_of(op.kind) == 2) apply_noise_to(br.rho, op.q1);
        }
        next.push_back(std::move(br));
      }
    }

    // Branches that agree on every clbit are indistinguishable from here on,
    // so they merge into one weighted mixture.
    std::map<std::vector<std::uint8_t>, std::size_t> index;
    branches.clear();
    for (Branch& br : next) {
      auto [it, inserted] = index.try_emplace(br.clbits, branches.size());
      if (inserted) {
        branches.push_back(std::move(br));
      } else {
        Branch& dst = branches[it->second];
        double total = dst.weight + br.weight;
        dst.rho.blend(dst.weight / total, br.rho, br.weight / total);
        dst.weight = total;
      }
    }
    if (branches.size() > limits.density_branch_cap)
      throw CapacityError("measurement branch count exceeded the cap of " +
                          std::to_string(limits.density_branch_cap));
  }

  std::map<std::string, double> probs;
  for (Branch& br : branches) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> reads;
    for (std::size_t si = terminal; si < steps.size(); ++si) {
      const Operation& op = circuit.ops[steps[si].op_index];
      if (noise.has_value() && !op.noise_exempt &&
          noise->apply_to_measurement)
        apply_noise_to(br.rho, op.q0);
      reads.emplace_back(op.q0, op.clbit);
    }
    if (reads.empty()) {
      probs[detail::clbits_to_string(br.clbits)] += br.weight;
      continue;
    }
    std::vector<double> diag = br.rho.diagonal();
    for (std::uint64_t idx = 0; idx < diag.size(); ++idx) {
      if (diag[idx] * br.weight < detail::kBranchPrune) continue;
      std::vector<std::uint8_t> clbits = br.clbits;
      for (auto [q, cl] : reads)
        clbits[cl] = static_cast<std::uint8_t>((idx >> q) & 1);
      probs[detail::clbits_to_string(clbits)] += br.weight * diag[idx];
    }
  }
  return OutcomeDistribution::exact(std::move(probs));
}

/// Stochastic (quantum-trajectory) sampling on pure states. Shot k draws
/// from its own stream derived from (noise seed, k); measurement outcomes
/// consume a draw only when genuinely random, and each noise application
/// consumes exactly one draw, so equal seeds give identical samples across
/// backends that follow the same discipline.
inline OutcomeDistribution
run_trajectories(const Circuit& circuit,
                 const std::optional<NoiseModel>& noise, std::uint64_t shots,
                 const SimLimits& limits = {}) {
  if (circuit.num_qubits > limits.statevector_max_qubits)
    throw CapacityError(
        "circuit needs " + std::to_string(circuit.num_qubits) +
        " qubits but the statevector engine is limited to " +
        std::to_string(limits.statevector_max_qubits) +
        " (raise SimLimits::statevector_max_qubits to override)");
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (noise) kraus_of(noise->channel);

  auto steps =
      detail::compile_sampler_program(circuit, noise.has_value());
  const std::uint64_t seed = noise ? noise->seed : 0;
  const bool damping =
      noise && noise->channel.kind == ChannelKind::AmplitudeDamping;

  std::map<std::string, std::uint64_t> counts;
  StateVector psi(circuit.num_qubits);
  std::vector<std::uint8_t> clbits(circuit.num_clbits);

  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    ShotRng rng = ShotRng::for_shot(seed, shot);
    psi = StateVector(circuit.num_qubits);
    std::fill(clbits.begin(), clbits.end(), 0);

    auto sample_bit = [&](std::uint32_t q) -> int {
      double p1 = psi.prob_one(q);
      int bit;
      if (p1 < detail::kDeterministicTol) {
        bit = 0;
      } else if (p1 > 1.0 - detail::kDeterministicTol) {
        bit = 1;
      } else {
        bit = rng.uniform() < p1 ? 1 : 0;
      }
      psi.project(q, bit, bit ? p1 : 1.0 - p1);
      return bit;
    };

    auto apply_noise_to = [&](std::uint32_t q, std::uint64_t uses) {
      NoiseChannel ch = fold_channel_uses(noise->channel, uses);
      if (damping) {
        double p1 = psi.prob_one(q);
        double p_jump = ch.p * p1;
        if (rng.uniform() < p_jump)
          psi.damp_jump(q, p1);
        else
          psi.damp_nojump(q, ch.p, p_jump);
      } else {
        psi.apply_pauli(sample_pauli(ch, rng), q);
      }
    };

    for (const detail::ProgStep& step : steps) {
      if (step.kind == detail::ProgStep::Kind::Burst) {
        for (auto [q, uses] : step.burst.uses) apply_noise_to(q, uses);
        continue;
      }
      const Operation& op = circuit.ops[step.op_index];
      if (op.condition && !detail::condition_met(*op.condition, clbits))
        continue;
      const bool noisy = noise.has_value() && !op.noise_exempt;
      switch (op.kind) {
      case GateKind::Measure:
        if (noisy && noise->apply_to_measurement) apply_noise_to(op.q0, 1);
        clbits[op.clbit] = static_cast<std::uint8_t>(sample_bit(op.q0));
        break;
      case GateKind::Reset:
        if (sample_bit(op.q0)) psi.apply_gate(GateKind::X, op.q0);
        if (noisy) apply_noise_to(op.q0, 1);
        break;
      default:
        psi.apply_gate(op.kind, op.q0, op.q1);
        if (noisy) {
          apply_noise_to(op.q0, 1);
          if (arity_of(op.kind) == 2) apply_noise_to(op.q1, 1);
        }
      }
    }
    ++counts[detail::clbits_to_string(clbits)];
  }
  return OutcomeDistribution::from_counts(counts, shots);
}

inline double state_fidelity(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("fidelity of differently sized states");
  return std::norm(a.overlap(b));
}

inline double state_fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.dim() != psi.dim())
    throw std::invalid_argument("fidelity of differently sized states");
  // <psi| rho |psi>
  std::complex<double> acc = 0;
  for (std::uint64_t r = 0; r < rho.dim(); ++r)
    for (std::uint64_t c = 0; c < rho.dim(); ++c)
      acc += std::conj(psi[r]) * rho.entry(r, c) * psi[c];
  return acc.real();
}

/// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 of two mixed
/// states.
inline double state_fidelity(const DensityMatrix& rho,
                             const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim())
    throw std::invalid_argument("fidelity of differently sized states");
  using Mat = Eigen::MatrixXcd;
  const auto d = static_cast<Eigen::Index>(rho.dim());
  Mat r(d, d), s(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      r(i, j) = rho.entry(static_cast<std::uint64_t>(i),
                          static_cast<std::uint64_t>(j));
      s(i, j) = sigma.entry(static_cast<std::uint64_t>(i),
                            static_cast<std::uint64_t>(j));
    }
  Eigen::SelfAdjointEigenSolver<Mat> er(r);
  Mat sqrt_r = er.eigenvectors() *
               er.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
               er.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Mat> em(sqrt_r * s * sqrt_r);
  double trace_sqrt = em.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return trace_sqrt * trace_sqrt;
}

} // namespace qec
