// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/noise.hpp"

namespace qec::detail {

inline bool condition_met(const Condition& g,
                          const std::vector<std::uint8_t>& clbits) {
  std::uint64_t v = 0;
  for (std::uint32_t k = 0; k <= g.last - g.first; ++k)
    v |= static_cast<std::uint64_t>(clbits[g.first + k] & 1) << k;
  return v == g.value;
}

inline std::string clbits_to_string(const std::vector<std::uint8_t>& clbits) {
  std::string s(clbits.size(), '0');
  for (std::size_t i = 0; i < clbits.size(); ++i)
    if (clbits[i]) s[i] = '1';
  return s;
}

/// A run of unconditioned identity ops folded into one noise event per
/// touched qubit. `uses` lists (qubit, repeat count) in first-touch order,
/// which fixes the order in which samplers draw randomness for the run.
struct NoiseBurst {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> uses;
};

struct ProgStep {
  enum class Kind { Op, Burst } kind = Kind::Op;
  std::size_t op_index = 0;
  NoiseBurst burst;
};

/// Pre-pass shared by the sampling backends. Identity gates do not change
/// the state, so a maximal run of unconditioned identities collapses into a
/// single per-qubit noise application with the channel folded analytically
/// (see fold_channel_uses); with noise disabled they disappear outright.
/// Exempt identities are dropped in both cases. Every other op passes
/// through untouched.
inline std::vector<ProgStep> compile_sampler_program(const Circuit& c,
                                                     bool noise_active) {
  std::vector<ProgStep> steps;
  steps.reserve(c.ops.size());
  NoiseBurst pending;

  auto flush = [&] {
    if (pending.uses.empty()) return;
    ProgStep step;
    step.kind = ProgStep::Kind::Burst;
    step.burst = std::move(pending);
    steps.push_back(std::move(step));
    pending = {};
  };

  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const Operation& op = c.ops[i];
    if (op.kind == GateKind::I && !op.condition) {
      if (!noise_active || op.noise_exempt) continue;
      auto it = std::find_if(pending.uses.begin(), pending.uses.end(),
                             [&](const auto& u) { return u.first == op.q0; });
      if (it == pending.uses.end())
        pending.uses.emplace_back(op.q0, 1);
      else
        ++it->second;
      continue;
    }
    flush();
    steps.push_back({ProgStep::Kind::Op, i, {}});
  }
  flush();
  return steps;
}

} // namespace qec::detail
