// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/errors.hpp"
#include "qec/pauli.hpp"
#include "qec/rng.hpp"

namespace qec {

/// Binary stabilizer tableau over n qubits: rows [0, n) hold destabilizers,
/// rows [n, 2n) stabilizers, plus one scratch row used by deterministic
/// measurement. Row k stores a Pauli as packed x/z bit vectors with a sign
/// bit r (the operator is (-1)^r * prod_q X^x Z^z up to the Y phase
/// convention). Gate updates and row multiplication operate on whole 64-bit
/// words, so circuits over a few hundred qubits stay cheap.
class Tableau {
public:
  explicit Tableau(std::uint32_t num_qubits) : n_(num_qubits) {
    if (num_qubits == 0) throw std::invalid_argument("empty tableau");
    words_ = (n_ + 63) / 64;
    x_.assign((2 * std::size_t{n_} + 1) * words_, 0);
    z_.assign((2 * std::size_t{n_} + 1) * words_, 0);
    r_.assign(2 * std::size_t{n_} + 1, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
      x_[row_offset(i) + i / 64] = std::uint64_t{1} << (i % 64);
      z_[row_offset(n_ + i) + i / 64] = std::uint64_t{1} << (i % 64);
    }
  }

  std::uint32_t num_qubits() const { return n_; }

  void apply_gate(GateKind kind, std::uint32_t q0, std::uint32_t q1 = 0) {
    switch (kind) {
    case GateKind::I: return;
    case GateKind::H: return gate_h(q0);
    case GateKind::X: return gate_x(q0);
    case GateKind::Y: return gate_y(q0);
    case GateKind::Z: return gate_z(q0);
    case GateKind::S: return gate_s(q0);
    case GateKind::Sdg: return gate_sdg(q0);
    case GateKind::CX: return gate_cx(q0, q1);
    case GateKind::CZ:
      gate_h(q1);
      gate_cx(q0, q1);
      gate_h(q1);
      return;
    default:
      throw UnsupportedGateError(
          "gate '" + std::string(name_of(kind)) +
          "' is not a Clifford operation; use a dense backend");
    }
  }

  void apply_pauli(Pauli p, std::uint32_t q) {
    switch (p) {
    case Pauli::I: return;
    case Pauli::X: return gate_x(q);
    case Pauli::Y: return gate_y(q);
    case Pauli::Z: return gate_z(q);
    }
  }

  /// True when the outcome of measuring qubit q is random (some stabilizer
  /// anticommutes with Z_q).
  bool measurement_is_random(std::uint32_t q) const {
    return find_anticommuting_stabilizer(q) < 2 * n_;
  }

  /// Measures qubit q in the computational basis, collapsing the tableau.
  /// A random outcome consumes exactly one draw (bit = u < 0.5); a
  /// deterministic outcome consumes none.
  int measure(std::uint32_t q, ShotRng& rng) {
    const std::uint32_t p = find_anticommuting_stabilizer(q);
    if (p < 2 * n_) {
      for (std::uint32_t i = 0; i < 2 * n_; ++i) {
        if (i == p || !x_bit(i, q)) continue;
        // Destabilizer signs are never consumed, and their products with
        // row p can carry imaginary phases, so only the bits are tracked.
        if (i < n_)
          row_xor(i, p);
        else
          rowsum(i, p);
      }
      copy_row(p - n_, p);
      zero_row(p);
      z_[row_offset(p) + q / 64] |= std::uint64_t{1} << (q % 64);
      int bit = rng.uniform() < 0.5 ? 1 : 0;
      r_[p] = static_cast<std::uint8_t>(bit);
      return bit;
    }
    // Deterministic: accumulate the stabilizer combination indexed by the
    // destabilizers that anticommute with Z_q into the scratch row.
    const std::uint32_t scratch = 2 * n_;
    zero_row(scratch);
    for (std::uint32_t i = 0; i < n_; ++i)
      if (x_bit(i, q)) rowsum(scratch, i + n_);
    return r_[scratch];
  }

  int reset(std::uint32_t q, ShotRng& rng) {
    int bit = measure(q, rng);
    if (bit) gate_x(q);
    return bit;
  }

  /// Verifies the tableau group structure: stabilizers commute pairwise,
  /// destabilizer i anticommutes with stabilizer i and commutes with every
  /// other row. Throws qec::Error on violation.
  void check_invariants() const {
    for (std::uint32_t a = 0; a < n_; ++a) {
      for (std::uint32_t b = 0; b < n_; ++b) {
        if (!rows_commute(n_ + a, n_ + b))
          throw Error("stabilizer rows " + std::to_string(a) + " and " +
                      std::to_string(b) + " anticommute");
        if (!rows_commute(a, b))
          throw Error("destabilizer rows " + std::to_string(a) + " and " +
                      std::to_string(b) + " anticommute");
        bool expect_anti = (a == b);
        if (rows_commute(a, n_ + b) == expect_anti)
          throw Error("destabilizer " + std::to_string(a) +
                      " has the wrong commutator with stabilizer " +
                      std::to_string(b));
      }
    }
  }

  /// Stabilizer row i as a PauliString (only for small tableaus; test aid).
  PauliString stabilizer(std::uint32_t i) const {
    PauliString out(n_);
    for (std::uint32_t q = 0; q < n_; ++q) {
      bool xb = x_bit(n_ + i, q), zb = z_bit(n_ + i, q);
      out.set(q, xb && zb ? Pauli::Y
                          : xb ? Pauli::X
                               : zb ? Pauli::Z : Pauli::I);
    }
    out.set_phase(r_[n_ + i] ? 2 : 0);
    return out;
  }

private:
  std::size_t row_offset(std::uint32_t row) const {
    return std::size_t{row} * words_;
  }

  bool x_bit(std::uint32_t row, std::uint32_t q) const {
    return (x_[row_offset(row) + q / 64] >> (q % 64)) & 1;
  }
  bool z_bit(std::uint32_t row, std::uint32_t q) const {
    return (z_[row_offset(row) + q / 64] >> (q % 64)) & 1;
  }

  void copy_row(std::uint32_t dst, std::uint32_t src) {
    for (std::uint32_t w = 0; w < words_; ++w) {
      x_[row_offset(dst) + w] = x_[row_offset(src) + w];
      z_[row_offset(dst) + w] = z_[row_offset(src) + w];
    }
    r_[dst] = r_[src];
  }

  void zero_row(std::uint32_t row) {
    for (std::uint32_t w = 0; w < words_; ++w) {
      x_[row_offset(row) + w] = 0;
      z_[row_offset(row) + w] = 0;
    }
    r_[row] = 0;
  }

  std::uint32_t find_anticommuting_stabilizer(std::uint32_t q) const {
    for (std::uint32_t i = n_; i < 2 * n_; ++i)
      if (x_bit(i, q)) return i;
    return 2 * n_;
  }

  bool rows_commute(std::uint32_t a, std::uint32_t b) const {
    int parity = 0;
    for (std::uint32_t w = 0; w < words_; ++w) {
      parity ^= std::popcount(x_[row_offset(a) + w] & z_[row_offset(b) + w]) &
                1;
      parity ^= std::popcount(z_[row_offset(a) + w] & x_[row_offset(b) + w]) &
                1;
    }
    return parity == 0;
  }

  /// row_h <- row_i * row_h, bits only (for destabilizer targets).
  void row_xor(std::uint32_t h, std::uint32_t i) {
    const std::size_t oh = row_offset(h), oi = row_offset(i);
    for (std::uint32_t w = 0; w < words_; ++w) {
      x_[oh + w] ^= x_[oi + w];
      z_[oh + w] ^= z_[oi + w];
    }
  }

  /// row_h <- row_i * row_h with exact sign tracking. The per-word masks
  /// classify the factors of row i (Y, X-only, Z-only) and pick out the
  /// positions of row h that contribute +i or -i to the product phase; the
  /// popcount difference fixes the resulting sign.
  void rowsum(std::uint32_t h, std::uint32_t i) {
    int s = 2 * (r_[h] + r_[i]);
    const std::size_t oh = row_offset(h), oi = row_offset(i);
    for (std::uint32_t w = 0; w < words_; ++w) {
      const std::uint64_t x1 = x_[oi + w], z1 = z_[oi + w];
      const std::uint64_t x2 = x_[oh + w], z2 = z_[oh + w];
      const std::uint64_t y1 = x1 & z1;
      const std::uint64_t xo1 = x1 & ~z1;
      const std::uint64_t zo1 = ~x1 & z1;
      const std::uint64_t plus =
          (y1 & z2 & ~x2) | (xo1 & x2 & z2) | (zo1 & x2 & ~z2);
      const std::uint64_t minus =
          (y1 & x2 & ~z2) | (xo1 & ~x2 & z2) | (zo1 & x2 & z2);
      s += std::popcount(plus) - std::popcount(minus);
      x_[oh + w] = x1 ^ x2;
      z_[oh + w] = z1 ^ z2;
    }
    s = ((s % 4) + 4) % 4;
    if (s & 1) throw Error("row product phase is imaginary");
    r_[h] = static_cast<std::uint8_t>(s / 2);
  }

  void gate_h(std::uint32_t q) {
    const std::uint32_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::uint32_t row = 0; row < 2 * n_; ++row) {
      std::uint64_t& xw = x_[row_offset(row) + w];
      std::uint64_t& zw = z_[row_offset(row) + w];
      r_[row] ^= static_cast<std::uint8_t>(((xw & zw & m) != 0));
      const std::uint64_t xb = xw & m, zb = zw & m;
      xw = (xw & ~m) | zb;
      zw = (zw & ~m) | xb;
    }
  }

  void gate_s(std::uint32_t q) {
    const std::uint32_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::uint32_t row = 0; row < 2 * n_; ++row) {
      std::uint64_t& xw = x_[row_offset(row) + w];
      std::uint64_t& zw = z_[row_offset(row) + w];
      r_[row] ^= static_cast<std::uint8_t>(((xw & zw & m) != 0));
      zw ^= xw & m;
    }
  }

  void gate_sdg(std::uint32_t q) {
    const std::uint32_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::uint32_t row = 0; row < 2 * n_; ++row) {
      std::uint64_t& xw = x_[row_offset(row) + w];
      std::uint64_t& zw = z_[row_offset(row) + w];
      r_[row] ^= static_cast<std::uint8_t>(((xw & ~zw & m) != 0));
      zw ^= xw & m;
    }
  }

  void gate_x(std::uint32_t q) {
    const std::uint32_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::uint32_t row = 0; row < 2 * n_; ++row)
      r_[row] ^= static_cast<std::uint8_t>((z_[row_offset(row) + w] & m) != 0);
  }

  void gate_z(std::uint32_t q) {
    const std::uint32_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::uint32_t row = 0; row < 2 * n_; ++row)
      r_[row] ^= static_cast<std::uint8_t>((x_[row_offset(row) + w] & m) != 0);
  }

  void gate_y(std::uint32_t q) {
    const std::uint32_t w = q / 64;
    const std::uint64_t m = std::uint64_t{1} << (q % 64);
    for (std::uint32_t row = 0; row < 2 * n_; ++row) {
      const std::uint64_t xb = x_[row_offset(row) + w] & m;
      const std::uint64_t zb = z_[row_offset(row) + w] & m;
      r_[row] ^= static_cast<std::uint8_t>((xb != 0) ^ (zb != 0));
    }
  }

  void gate_cx(std::uint32_t c, std::uint32_t t) {
    const std::uint32_t wc = c / 64, wt = t / 64;
    const std::uint64_t mc = std::uint64_t{1} << (c % 64);
    const std::uint64_t mt = std::uint64_t{1} << (t % 64);
    for (std::uint32_t row = 0; row < 2 * n_; ++row) {
      const std::size_t o = row_offset(row);
      const bool xc = (x_[o + wc] & mc) != 0;
      const bool zc = (z_[o + wc] & mc) != 0;
      const bool xt = (x_[o + wt] & mt) != 0;
      const bool zt = (z_[o + wt] & mt) != 0;
      r_[row] ^= static_cast<std::uint8_t>(xc && zt && !(xt ^ zc));
      if (xc) x_[o + wt] ^= mt;
      if (zt) z_[o + wc] ^= mc;
    }
  }

  std::uint32_t n_;
  std::uint32_t words_;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::vector<std::uint8_t> r_;
};

} // namespace qec
