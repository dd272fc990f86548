// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qec/noise.hpp"
#include "qec/statevector.hpp"

namespace qec {

/// Dense density matrix, stored in vectorized form as a 2n-qubit amplitude
/// array: entry rho(row, col) lives at index row + col * 2^n. A unitary U
/// then acts as U on the row qubits [0, n) and conj(U) on the col qubits
/// [n, 2n), and a Kraus map becomes a sum over pairs (K, conj K).
class DensityMatrix {
public:
  explicit DensityMatrix(std::uint32_t num_qubits)
      : n_(num_qubits), vec_(2 * num_qubits) {}

  static DensityMatrix from_statevector(const StateVector& psi) {
    DensityMatrix rho(psi.num_qubits());
    const std::uint64_t d = psi.dim();
    for (std::uint64_t col = 0; col < d; ++col)
      for (std::uint64_t row = 0; row < d; ++row)
        rho.vec_[row | (col << rho.n_)] = psi[row] * std::conj(psi[col]);
    return rho;
  }

  std::uint32_t num_qubits() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }

  std::complex<double> entry(std::uint64_t row, std::uint64_t col) const {
    return vec_[row | (col << n_)];
  }

  void apply_gate(GateKind kind, std::uint32_t q0, std::uint32_t q1 = 0) {
    if (arity_of(kind) == 2) {
      // CX and CZ are real, so the col side uses the same gate.
      vec_.apply_gate(kind, q0, q1);
      vec_.apply_gate(kind, q0 + n_, q1 + n_);
      return;
    }
    vec_.apply_gate(kind, q0);
    vec_.apply_matrix(conj2(gate_matrix(kind)), q0 + n_);
  }

  void apply_pauli(Pauli p, std::uint32_t q) {
    static const Mat2 mats[4] = {gate_matrix(GateKind::I),
                                 gate_matrix(GateKind::X),
                                 gate_matrix(GateKind::Y),
                                 gate_matrix(GateKind::Z)};
    apply_kraus({mats[static_cast<int>(p)]}, q);
  }

  /// In-place Kraus map on qubit q: rho <- sum_K K rho K^dagger.
  void apply_kraus(const std::vector<Mat2>& kraus, std::uint32_t q) {
    StateVector acc = vec_;
    bool first = true;
    for (const Mat2& k : kraus) {
      StateVector term = vec_;
      term.apply_matrix(k, q);
      term.apply_matrix(conj2(k), q + n_);
      if (first) {
        acc = std::move(term);
        first = false;
      } else {
        for (std::uint64_t i = 0; i < acc.dim(); ++i) acc[i] += term[i];
      }
    }
    vec_ = std::move(acc);
  }

  void apply_channel(const NoiseChannel& ch, std::uint32_t q) {
    apply_kraus(kraus_of(ch), q);
  }

  double trace() const {
    double t = 0;
    for (std::uint64_t row = 0; row < dim(); ++row)
      t += entry(row, row).real();
    return t;
  }

  double prob_one(std::uint32_t q) const {
    const std::uint64_t bit = std::uint64_t{1} << q;
    double p = 0;
    for (std::uint64_t row = 0; row < dim(); ++row)
      if (row & bit) p += entry(row, row).real();
    return p;
  }

  /// Projects qubit q onto `bit` and renormalizes by `prob`, which must be
  /// the probability of that outcome.
  void project(std::uint32_t q, int bit, double prob) {
    if (prob <= 0)
      throw Error("cannot project onto a zero-probability outcome");
    const std::uint64_t rbit = std::uint64_t{1} << q;
    const std::uint64_t cbit = std::uint64_t{1} << (q + n_);
    const std::uint64_t want =
        bit ? (rbit | cbit) : 0;
    const double scale = 1.0 / prob;
    for (std::uint64_t i = 0; i < vec_.dim(); ++i) {
      if ((i & (rbit | cbit)) == want)
        vec_[i] *= scale;
      else
        vec_[i] = 0.0;
    }
  }

  /// Non-unitary reset to |0>: rho <- P0 rho P0 + X P1 rho P1 X.
  void reset(std::uint32_t q) {
    apply_kraus({Mat2{1, 0, 0, 0}, Mat2{0, 1, 0, 0}}, q);
  }

  /// Diagonal entries (the computational-basis outcome probabilities).
  std::vector<double> diagonal() const {
    std::vector<double> d(dim());
    for (std::uint64_t row = 0; row < dim(); ++row)
      d[row] = entry(row, row).real();
    return d;
  }

  /// Weighted sum with another density matrix: this = w1*this + w2*other.
  void blend(double w1, const DensityMatrix& other, double w2) {
    for (std::uint64_t i = 0; i < vec_.dim(); ++i)
      vec_[i] = w1 * vec_[i] + w2 * other.vec_[i];
  }

private:
  static Mat2 conj2(const Mat2& m) {
    return {std::conj(m[0]), std::conj(m[1]), std::conj(m[2]),
            std::conj(m[3])};
  }

  std::uint32_t n_;
  StateVector vec_;
};

} // namespace qec
