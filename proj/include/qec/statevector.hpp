// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/errors.hpp"
#include "qec/noise.hpp"
#include "qec/pauli.hpp"

namespace qec {

/// Dense pure-state amplitude vector. Basis-state index bit q holds the
/// value of qubit q, i.e. |q2 q1 q0> is stored at index q0 + 2*q1 + 4*q2.
///
/// The hot kernels below work on separate real/imaginary doubles instead of
/// std::complex arithmetic, which keeps the compiler from emitting library
/// calls for complex multiplication on the innermost loops.
class StateVector {
public:
  explicit StateVector(std::uint32_t num_qubits) : n_(num_qubits) {
    if (num_qubits > 30)
      throw CapacityError("statevector limited to 30 qubits");
    amps_.assign(std::uint64_t{1} << n_, {0.0, 0.0});
    amps_[0] = 1.0;
  }

  std::uint32_t num_qubits() const { return n_; }
  std::uint64_t dim() const { return amps_.size(); }

  std::complex<double>& operator[](std::uint64_t i) { return amps_[i]; }
  const std::complex<double>& operator[](std::uint64_t i) const {
    return amps_[i];
  }

  /// Applies a unitary gate. Measure/Reset are not unitaries and are
  /// handled by the simulators on top of prob_one/project.
  void apply_gate(GateKind kind, std::uint32_t q0, std::uint32_t q1 = 0) {
    switch (kind) {
    case GateKind::I: return;
    case GateKind::H: return apply_h(q0);
    case GateKind::X: return apply_x(q0);
    case GateKind::Y: return apply_y(q0);
    case GateKind::Z: return apply_z(q0);
    case GateKind::S: return apply_phase(q0, 0.0, 1.0);
    case GateKind::Sdg: return apply_phase(q0, 0.0, -1.0);
    case GateKind::T: return apply_phase(q0, M_SQRT1_2, M_SQRT1_2);
    case GateKind::CX: return apply_cx(q0, q1);
    case GateKind::CZ: return apply_cz(q0, q1);
    case GateKind::Measure:
    case GateKind::Reset:
      throw std::invalid_argument("apply_gate expects a unitary kind");
    }
  }

  void apply_pauli(Pauli p, std::uint32_t q) {
    switch (p) {
    case Pauli::I: return;
    case Pauli::X: return apply_x(q);
    case Pauli::Y: return apply_y(q);
    case Pauli::Z: return apply_z(q);
    }
  }

  /// Generic single-qubit matrix {m00, m01, m10, m11}.
  void apply_matrix(const Mat2& m, std::uint32_t q) {
    double* v = raw();
    const double ar = m[0].real(), ai = m[0].imag();
    const double br = m[1].real(), bi = m[1].imag();
    const double cr = m[2].real(), ci = m[2].imag();
    const double dr = m[3].real(), di = m[3].imag();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        double* p0 = v + 2 * i;
        double* p1 = v + 2 * (i + step);
        const double re0 = p0[0], im0 = p0[1];
        const double re1 = p1[0], im1 = p1[1];
        p0[0] = ar * re0 - ai * im0 + br * re1 - bi * im1;
        p0[1] = ar * im0 + ai * re0 + br * im1 + bi * re1;
        p1[0] = cr * re0 - ci * im0 + dr * re1 - di * im1;
        p1[1] = cr * im0 + ci * re0 + dr * im1 + di * re1;
      }
    }
  }

  double norm_squared() const {
    double sum = 0;
    const double* v = raw();
    for (std::uint64_t i = 0; i < 2 * dim(); ++i) sum += v[i] * v[i];
    return sum;
  }

  double prob_one(std::uint32_t q) const {
    const double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    double sum = 0;
    for (std::uint64_t base = step; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i)
        sum += v[2 * i] * v[2 * i] + v[2 * i + 1] * v[2 * i + 1];
    }
    return sum;
  }

  /// Projects qubit q onto `bit` and renormalizes. `prob` must be the
  /// probability of that outcome (avoids recomputing it at call sites that
  /// already sampled against it).
  void project(std::uint32_t q, int bit, double prob) {
    if (prob <= 0)
      throw Error("cannot project onto a zero-probability outcome");
    const double scale = 1.0 / std::sqrt(prob);
    double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        std::uint64_t keep = bit ? i + step : i;
        std::uint64_t kill = bit ? i : i + step;
        v[2 * keep] *= scale;
        v[2 * keep + 1] *= scale;
        v[2 * kill] = 0.0;
        v[2 * kill + 1] = 0.0;
      }
    }
  }

  /// Decay branch of amplitude damping: |1> amplitude moves to |0>. The
  /// jump operator sqrt(gamma)|0><1| followed by renormalization with the
  /// branch probability gamma * P(1) leaves an overall factor 1/sqrt(P(1)),
  /// where `p_one` = P(1) is the pre-jump excited population.
  void damp_jump(std::uint32_t q, double p_one) {
    if (p_one <= 0) throw Error("damping jump branch has zero probability");
    const double scale = 1.0 / std::sqrt(p_one);
    double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        const std::uint64_t i1 = i + step;
        v[2 * i] = v[2 * i1] * scale;
        v[2 * i + 1] = v[2 * i1 + 1] * scale;
        v[2 * i1] = 0.0;
        v[2 * i1 + 1] = 0.0;
      }
    }
  }

  /// No-decay branch of amplitude damping: |1> amplitudes shrink by
  /// sqrt(1-gamma) and the state renormalizes by its branch probability
  /// 1 - gamma * P(1).
  void damp_nojump(std::uint32_t q, double gamma, double p_jump) {
    const double keep = 1.0 - p_jump;
    if (keep <= 0) throw Error("damping no-jump branch has zero probability");
    const double s0 = 1.0 / std::sqrt(keep);
    const double s1 = std::sqrt(1.0 - gamma) * s0;
    double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        const std::uint64_t i1 = i + step;
        v[2 * i] *= s0;
        v[2 * i + 1] *= s0;
        v[2 * i1] *= s1;
        v[2 * i1 + 1] *= s1;
      }
    }
  }

  std::complex<double> overlap(const StateVector& other) const {
    std::complex<double> acc = 0;
    for (std::uint64_t i = 0; i < dim(); ++i)
      acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
  }

private:
  double* raw() { return reinterpret_cast<double*>(amps_.data()); }
  const double* raw() const {
    return reinterpret_cast<const double*>(amps_.data());
  }

  void apply_h(std::uint32_t q) {
    double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        double* p0 = v + 2 * i;
        double* p1 = v + 2 * (i + step);
        const double re0 = p0[0], im0 = p0[1];
        const double re1 = p1[0], im1 = p1[1];
        p0[0] = (re0 + re1) * M_SQRT1_2;
        p0[1] = (im0 + im1) * M_SQRT1_2;
        p1[0] = (re0 - re1) * M_SQRT1_2;
        p1[1] = (im0 - im1) * M_SQRT1_2;
      }
    }
  }

  void apply_x(std::uint32_t q) {
    double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        double* p0 = v + 2 * i;
        double* p1 = v + 2 * (i + step);
        std::swap(p0[0], p1[0]);
        std::swap(p0[1], p1[1]);
      }
    }
  }

  void apply_y(std::uint32_t q) {
    double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = 0; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        double* p0 = v + 2 * i;
        double* p1 = v + 2 * (i + step);
        const double re0 = p0[0], im0 = p0[1];
        // |0> gets -i * a1, |1> gets i * a0.
        p0[0] = p1[1];
        p0[1] = -p1[0];
        p1[0] = -im0;
        p1[1] = re0;
      }
    }
  }

  void apply_z(std::uint32_t q) {
    double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = step; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        v[2 * i] = -v[2 * i];
        v[2 * i + 1] = -v[2 * i + 1];
      }
    }
  }

  // diag(1, pr + i*pi) on qubit q.
  void apply_phase(std::uint32_t q, double pr, double pi) {
    double* v = raw();
    const std::uint64_t step = std::uint64_t{1} << q;
    for (std::uint64_t base = step; base < dim(); base += 2 * step) {
      for (std::uint64_t i = base; i < base + step; ++i) {
        const double re = v[2 * i], im = v[2 * i + 1];
        v[2 * i] = pr * re - pi * im;
        v[2 * i + 1] = pr * im + pi * re;
      }
    }
  }

  void apply_cx(std::uint32_t control, std::uint32_t target) {
    double* v = raw();
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    for (std::uint64_t i = 0; i < dim(); ++i) {
      if ((i & cbit) && !(i & tbit)) {
        const std::uint64_t j = i | tbit;
        std::swap(v[2 * i], v[2 * j]);
        std::swap(v[2 * i + 1], v[2 * j + 1]);
      }
    }
  }

  void apply_cz(std::uint32_t a, std::uint32_t b) {
    double* v = raw();
    const std::uint64_t mask =
        (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    for (std::uint64_t i = 0; i < dim(); ++i) {
      if ((i & mask) == mask) {
        v[2 * i] = -v[2 * i];
        v[2 * i + 1] = -v[2 * i + 1];
      }
    }
  }

  std::uint32_t n_;
  std::vector<std::complex<double>> amps_;
};

/// Matrix of a single-qubit unitary kind (two-qubit kinds are rejected).
inline Mat2 gate_matrix(GateKind kind) {
  const std::complex<double> i1(0.0, 1.0);
  switch (kind) {
  case GateKind::I: return {1, 0, 0, 1};
  case GateKind::H:
    return {M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
  case GateKind::X: return {0, 1, 1, 0};
  case GateKind::Y: return {0, -i1, i1, 0};
  case GateKind::Z: return {1, 0, 0, -1};
  case GateKind::S: return {1, 0, 0, i1};
  case GateKind::Sdg: return {1, 0, 0, -i1};
  case GateKind::T:
    return {1, 0, 0, std::complex<double>(M_SQRT1_2, M_SQRT1_2)};
  default:
    throw std::invalid_argument("gate_matrix expects a single-qubit unitary");
  }
}

} // namespace qec
