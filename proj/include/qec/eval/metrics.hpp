// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <algorithm>
#include <cmath>

#include "qec/outcome.hpp"

namespace qec {

/// Hellinger (Bhattacharyya) coefficient between two outcome distributions:
/// sum over all bitstrings of sqrt(p_i * q_i). Equals 1 iff the
/// distributions coincide and 0 iff their supports are disjoint. Bitstrings
/// missing from either map count as probability zero, so only the common
/// support contributes.
inline double hellinger_coefficient(const OutcomeDistribution& p,
                                    const OutcomeDistribution& q) {
  p.check_normalized();
  q.check_normalized();
  double sum = 0.0;
  for (const auto& [key, pv] : p.probabilities) {
    auto it = q.probabilities.find(key);
    if (it != q.probabilities.end()) sum += std::sqrt(pv * it->second);
  }
  return std::clamp(sum, 0.0, 1.0);
}

} // namespace qec
