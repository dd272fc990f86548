// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qec/errors.hpp"
#include "qec/pauli.hpp"
#include "qec/rng.hpp"

namespace qec {

enum class ChannelKind : std::uint8_t {
  BitFlip,
  PhaseFlip,
  Depolarizing,
  AmplitudeDamping,
};

inline std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
  case ChannelKind::BitFlip: return "bitflip";
  case ChannelKind::PhaseFlip: return "phaseflip";
  case ChannelKind::Depolarizing: return "depolarizing";
  case ChannelKind::AmplitudeDamping: return "damping";
  }
  return "";
}

inline std::optional<ChannelKind> channel_from_name(std::string_view name) {
  using C = ChannelKind;
  for (C c : {C::BitFlip, C::PhaseFlip, C::Depolarizing, C::AmplitudeDamping})
    if (name == channel_name(c)) return c;
  return std::nullopt;
}

/// A single-qubit noise channel with one strength parameter: the error
/// probability for the Pauli channels, the decay probability gamma for
/// amplitude damping.
struct NoiseChannel {
  ChannelKind kind = ChannelKind::Depolarizing;
  double p = 0.0;

  friend bool operator==(const NoiseChannel&, const NoiseChannel&) = default;
};

/// 2x2 complex matrix in row-major order: {m00, m01, m10, m11}.
using Mat2 = std::array<std::complex<double>, 4>;

/// The channels whose Kraus operators are all proportional to Paulis can be
/// simulated by stabilizer backends; amplitude damping cannot.
inline bool is_clifford_compatible(const NoiseChannel& ch) {
  return ch.kind != ChannelKind::AmplitudeDamping;
}

namespace detail {

inline void check_strength(const NoiseChannel& ch) {
  if (!(ch.p >= 0.0 && ch.p <= 1.0))
    throw std::invalid_argument("channel strength must lie in [0, 1], got " +
                                std::to_string(ch.p));
}

// Sum of K^dagger K over the operators must be the identity.
inline void check_completeness(const std::vector<Mat2>& kraus) {
  std::complex<double> acc[4] = {};
  for (const Mat2& k : kraus) {
    acc[0] += std::conj(k[0]) * k[0] + std::conj(k[2]) * k[2];
    acc[1] += std::conj(k[0]) * k[1] + std::conj(k[2]) * k[3];
    acc[2] += std::conj(k[1]) * k[0] + std::conj(k[3]) * k[2];
    acc[3] += std::conj(k[1]) * k[1] + std::conj(k[3]) * k[3];
  }
  constexpr double tol = 1e-12;
  if (std::abs(acc[0] - 1.0) > tol || std::abs(acc[3] - 1.0) > tol ||
      std::abs(acc[1]) > tol || std::abs(acc[2]) > tol)
    throw Error("Kraus operators do not satisfy the completeness relation");
}

} // namespace detail

/// Kraus decomposition of the channel. Validates the strength parameter and
/// the completeness relation (tolerance 1e-12) before returning.
inline std::vector<Mat2> kraus_of(const NoiseChannel& ch) {
  detail::check_strength(ch);
  const double p = ch.p;
  std::vector<Mat2> ops;
  switch (ch.kind) {
  case ChannelKind::BitFlip: {
    double a = std::sqrt(1.0 - p), b = std::sqrt(p);
    ops.push_back({a, 0.0, 0.0, a});
    ops.push_back({0.0, b, b, 0.0});
    break;
  }
  case ChannelKind::PhaseFlip: {
    double a = std::sqrt(1.0 - p), b = std::sqrt(p);
    ops.push_back({a, 0.0, 0.0, a});
    ops.push_back({b, 0.0, 0.0, -b});
    break;
  }
  case ChannelKind::Depolarizing: {
    double a = std::sqrt(1.0 - 3.0 * p / 4.0), b = std::sqrt(p / 4.0);
    std::complex<double> ib(0.0, b);
    ops.push_back({a, 0.0, 0.0, a});
    ops.push_back({0.0, b, b, 0.0});
    ops.push_back({0.0, -ib, ib, 0.0});
    ops.push_back({b, 0.0, 0.0, -b});
    break;
  }
  case ChannelKind::AmplitudeDamping: {
    ops.push_back({1.0, 0.0, 0.0, std::sqrt(1.0 - p)});
    ops.push_back({0.0, std::sqrt(p), 0.0, 0.0});
    break;
  }
  }
  detail::check_completeness(ops);
  return ops;
}

/// Samples which Pauli the channel applies in a stochastic unraveling.
/// Consumes exactly one draw. Only valid for Clifford-compatible channels.
inline Pauli sample_pauli(const NoiseChannel& ch, ShotRng& rng) {
  detail::check_strength(ch);
  double u = rng.uniform();
  switch (ch.kind) {
  case ChannelKind::BitFlip:
    return u < ch.p ? Pauli::X : Pauli::I;
  case ChannelKind::PhaseFlip:
    return u < ch.p ? Pauli::Z : Pauli::I;
  case ChannelKind::Depolarizing: {
    double q = ch.p / 4.0;
    if (u < q) return Pauli::X;
    if (u < 2 * q) return Pauli::Y;
    if (u < 3 * q) return Pauli::Z;
    return Pauli::I;
  }
  case ChannelKind::AmplitudeDamping:
    throw UnsupportedGateError(
        "amplitude damping has no Pauli unraveling; use a dense backend");
  }
  throw std::logic_error("unreachable");
}

/// Channel equivalent to k consecutive uses of `ch` on the same qubit.
///
/// Each family is closed under composition, so a run of identity ops under a
/// uniform noise model can be folded into a single event:
///   bit/phase flip: p_k = (1 - (1-2p)^k) / 2
///   depolarizing:   p_k = 1 - (1-p)^k
///   damping:        gamma_k = 1 - (1-gamma)^k
inline NoiseChannel fold_channel_uses(const NoiseChannel& ch,
                                      std::uint64_t k) {
  detail::check_strength(ch);
  if (k == 0) return {ch.kind, 0.0};
  if (k == 1) return ch;
  auto dk = static_cast<double>(k);
  switch (ch.kind) {
  case ChannelKind::BitFlip:
  case ChannelKind::PhaseFlip:
    return {ch.kind, (1.0 - std::pow(1.0 - 2.0 * ch.p, dk)) / 2.0};
  case ChannelKind::Depolarizing:
  case ChannelKind::AmplitudeDamping:
    return {ch.kind, 1.0 - std::pow(1.0 - ch.p, dk)};
  }
  throw std::logic_error("unreachable");
}

/// A noise configuration for a simulation run: the channel applied after
/// every operation on every qubit the operation touches (and before the
/// readout for measurements, when `apply_to_measurement` is set), plus the
/// seed from which per-shot streams are derived.
struct NoiseModel {
  NoiseChannel channel;
  std::uint64_t seed = 0;
  bool apply_to_measurement = true;
};

} // namespace qec
