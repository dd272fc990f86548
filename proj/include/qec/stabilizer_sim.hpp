// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/noise.hpp"
#include "qec/outcome.hpp"
#include "qec/rng.hpp"
#include "qec/sim_common.hpp"
#include "qec/tableau.hpp"

namespace qec {

/// Checks that the stabilizer backend can run the circuit/noise pair and
/// reports what rules it out. Returns an empty string when compatible.
inline std::string
stabilizer_incompatibility(const Circuit& circuit,
                           const std::optional<NoiseModel>& noise) {
  for (const Operation& op : circuit.ops) {
    if (op.kind == GateKind::T)
      return "gate 't' is not a Clifford operation; use run_density or "
             "run_trajectories";
  }
  if (noise && !is_clifford_compatible(noise->channel))
    return "amplitude damping has no Pauli unraveling; use run_density or "
           "run_trajectories";
  return "";
}

/// Tableau-based sampler for Clifford circuits under Pauli noise. Follows
/// the same random-stream discipline as run_trajectories (one draw per noise
/// application, one draw per genuinely random measurement), so with equal
/// seeds the two backends return identical samples on circuits both can
/// simulate.
inline OutcomeDistribution
run_stabilizer(const Circuit& circuit,
               const std::optional<NoiseModel>& noise, std::uint64_t shots) {
  if (std::string why = stabilizer_incompatibility(circuit, noise);
      !why.empty())
    throw UnsupportedGateError(why);
  if (shots == 0) throw std::invalid_argument("shots must be positive");
  if (circuit.num_qubits == 0)
    throw std::invalid_argument("cannot simulate an empty register");
  if (noise) kraus_of(noise->channel);

  auto steps = detail::compile_sampler_program(circuit, noise.has_value());
  const std::uint64_t seed = noise ? noise->seed : 0;

  std::map<std::string, std::uint64_t> counts;
  std::vector<std::uint8_t> clbits(circuit.num_clbits);

  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    ShotRng rng = ShotRng::for_shot(seed, shot);
    Tableau tab(circuit.num_qubits);
    std::fill(clbits.begin(), clbits.end(), 0);

    auto apply_noise_to = [&](std::uint32_t q, std::uint64_t uses) {
      tab.apply_pauli(sample_pauli(fold_channel_uses(noise->channel, uses),
                                   rng),
                      q);
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
        clbits[op.clbit] = static_cast<std::uint8_t>(tab.measure(op.q0, rng));
        break;
      case GateKind::Reset:
        tab.reset(op.q0, rng);
        if (noisy) apply_noise_to(op.q0, 1);
        break;
      default:
        tab.apply_gate(op.kind, op.q0, op.q1);
        if (noisy) {
          apply_noise_to(op.q0, 1);
          if (arity_of(op.kind) == 2) apply_noise_to(op.q1, 1);
        }
      }
#ifndef NDEBUG
      tab.check_invariants();
#endif
    }
    if (shot == 0) tab.check_invariants();
    ++counts[detail::clbits_to_string(clbits)];
  }
  return OutcomeDistribution::from_counts(counts, shots);
}

} // namespace qec
