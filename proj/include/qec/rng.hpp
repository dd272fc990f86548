// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cstdint>
#include <random>

namespace qec {

/// Finalizer of the splitmix64 generator. Used to spread (seed, stream)
/// pairs into well-separated 64-bit states.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-shot random stream.
///
/// Every shot of a sampling run owns an independent stream derived from the
/// model seed and the shot index, so runs are reproducible regardless of
/// execution order and two backends that consume draws in the same order
/// produce identical samples.
class ShotRng {
public:
  explicit ShotRng(std::uint64_t stream_state) : gen_(stream_state) {}

  static ShotRng for_shot(std::uint64_t seed, std::uint64_t shot) {
    return ShotRng(splitmix64(splitmix64(seed) ^ splitmix64(~shot)));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t bits() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

} // namespace qec
