// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "qec/errors.hpp"

namespace qec {

/// A probability distribution over classical outcome strings. Character k of
/// a key is the value of clbit k ('0' or '1'), so clbit 0 is the leftmost
/// character. `shots` is empty for exact (analytically computed)
/// distributions and carries the sample count for estimated ones.
struct OutcomeDistribution {
  std::map<std::string, double> probabilities;
  std::optional<std::uint64_t> shots;

  static OutcomeDistribution exact(std::map<std::string, double> probs) {
    OutcomeDistribution d;
    d.probabilities = std::move(probs);
    d.check_normalized();
    return d;
  }

  static OutcomeDistribution
  from_counts(const std::map<std::string, std::uint64_t>& counts,
              std::uint64_t total_shots) {
    if (total_shots == 0)
      throw std::invalid_argument("cannot build a distribution from 0 shots");
    std::uint64_t sum = 0;
    OutcomeDistribution d;
    for (const auto& [key, count] : counts) {
      sum += count;
      if (count > 0)
        d.probabilities[key] =
            static_cast<double>(count) / static_cast<double>(total_shots);
    }
    if (sum != total_shots)
      throw std::invalid_argument("counts do not add up to the shot total");
    d.shots = total_shots;
    return d;
  }

  double prob(const std::string& outcome) const {
    auto it = probabilities.find(outcome);
    return it == probabilities.end() ? 0.0 : it->second;
  }

  /// Total probability mass; 1 within tolerance for a valid distribution.
  double total() const {
    double sum = 0;
    for (const auto& [key, p] : probabilities) sum += p;
    return sum;
  }

  void check_normalized(double tol = 1e-9) const {
    for (const auto& [key, p] : probabilities) {
      if (!(p >= -tol))
        throw Error("negative probability for outcome \"" + key + "\"");
      for (char ch : key)
        if (ch != '0' && ch != '1')
          throw Error("outcome key \"" + key + "\" is not a bitstring");
    }
    if (std::abs(total() - 1.0) > tol)
      throw Error("distribution is not normalized (total " +
                  std::to_string(total()) + ")");
  }

  /// Marginal over the first `first_k` clbits: keys are truncated to their
  /// first `first_k` characters and the mass of coinciding prefixes is
  /// summed. Keys shorter than `first_k` are rejected.
  OutcomeDistribution marginal(std::uint32_t first_k) const {
    OutcomeDistribution out;
    out.shots = shots;
    for (const auto& [key, p] : probabilities) {
      if (key.size() < first_k)
        throw std::invalid_argument("outcome \"" + key +
                                    "\" is shorter than the marginal width");
      out.probabilities[key.substr(0, first_k)] += p;
    }
    return out;
  }
};

/// Total variation distance: max over events of the probability difference,
/// i.e. half the L1 distance between the distributions.
inline double total_variation_distance(const OutcomeDistribution& a,
                                       const OutcomeDistribution& b) {
  double l1 = 0;
  for (const auto& [key, pa] : a.probabilities)
    l1 += std::abs(pa - b.prob(key));
  for (const auto& [key, pb] : b.probabilities)
    if (a.probabilities.find(key) == a.probabilities.end()) l1 += pb;
  return 0.5 * l1;
}

} // namespace qec
