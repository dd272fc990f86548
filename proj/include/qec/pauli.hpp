// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qec {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_to_char(Pauli p) {
  switch (p) {
  case Pauli::I: return 'I';
  case Pauli::X: return 'X';
  case Pauli::Y: return 'Y';
  case Pauli::Z: return 'Z';
  }
  return '?';
}

/// An n-qubit Pauli operator in the symplectic (x|z) representation with a
/// global phase i^phase. Qubit q carries X iff bit q of `x` is set, Z iff
/// bit q of `z` is set, and Y iff both are set (Y = iXZ). Limited to 32
/// qubits, which covers every code block handled by the compiler.
class PauliString {
public:
  PauliString() = default;
  explicit PauliString(std::uint32_t num_qubits) : n_(num_qubits) {
    if (num_qubits > 32)
      throw std::invalid_argument("PauliString supports at most 32 qubits");
  }

  /// Parses strings such as "+XIZ", "-IYI" or "ZZ". Character k names the
  /// factor on qubit k.
  static PauliString parse(const std::string& text) {
    std::size_t start = 0;
    std::uint8_t phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
      phase = text[0] == '-' ? 2 : 0;
      start = 1;
    }
    PauliString out(static_cast<std::uint32_t>(text.size() - start));
    out.phase_ = phase;
    for (std::uint32_t q = 0; q + start < text.size(); ++q) {
      switch (text[q + start]) {
      case 'I': break;
      case 'X': out.set(q, Pauli::X); break;
      case 'Y': out.set(q, Pauli::Y); break;
      case 'Z': out.set(q, Pauli::Z); break;
      default:
        throw std::invalid_argument("invalid Pauli character in \"" + text +
                                    "\"");
      }
    }
    return out;
  }

  std::uint32_t num_qubits() const { return n_; }

  Pauli at(std::uint32_t q) const {
    check_index(q);
    bool xb = (x_ >> q) & 1u;
    bool zb = (z_ >> q) & 1u;
    if (xb && zb) return Pauli::Y;
    if (xb) return Pauli::X;
    if (zb) return Pauli::Z;
    return Pauli::I;
  }

  void set(std::uint32_t q, Pauli p) {
    check_index(q);
    std::uint32_t mask = 1u << q;
    x_ &= ~mask;
    z_ &= ~mask;
    if (p == Pauli::X || p == Pauli::Y) x_ |= mask;
    if (p == Pauli::Z || p == Pauli::Y) z_ |= mask;
  }

  std::uint32_t x_bits() const { return x_; }
  std::uint32_t z_bits() const { return z_; }

  /// Phase exponent k in the overall factor i^k (mod 4).
  std::uint8_t phase() const { return phase_; }
  void set_phase(std::uint8_t k) { phase_ = k & 3u; }

  /// +1 or -1 for operators with a real sign; throws for i / -i phases.
  int sign() const {
    if (phase_ == 0) return 1;
    if (phase_ == 2) return -1;
    throw std::logic_error("PauliString has an imaginary phase");
  }

  /// Number of non-identity factors.
  std::uint32_t weight() const {
    return static_cast<std::uint32_t>(std::popcount(x_ | z_));
  }

  bool is_identity() const { return (x_ | z_) == 0; }

  bool commutes_with(const PauliString& other) const {
    int sym = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
    return (sym & 1) == 0;
  }

  /// Product this * other, tracking the i^k phase of the composition.
  PauliString operator*(const PauliString& other) const {
    if (n_ != other.n_)
      throw std::invalid_argument("PauliString size mismatch");
    PauliString out(n_);
    out.phase_ = static_cast<std::uint8_t>((phase_ + other.phase_) & 3u);
    for (std::uint32_t q = 0; q < n_; ++q) {
      bool x1 = (x_ >> q) & 1u, z1 = (z_ >> q) & 1u;
      bool x2 = (other.x_ >> q) & 1u, z2 = (other.z_ >> q) & 1u;
      // i^g contribution of multiplying single-qubit factors, with
      // g in {0, 1, 3} depending on the cyclic order (XY=iZ, YX=-iZ, ...).
      out.phase_ = static_cast<std::uint8_t>(
          (out.phase_ + factor_phase(x1, z1, x2, z2)) & 3u);
    }
    out.x_ = x_ ^ other.x_;
    out.z_ = z_ ^ other.z_;
    return out;
  }

  bool operator==(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_ &&
           phase_ == other.phase_;
  }

  /// Renders as sign + one character per qubit, e.g. "+XIZ".
  std::string str() const {
    std::string out;
    switch (phase_) {
    case 0: out = "+"; break;
    case 1: out = "+i"; break;
    case 2: out = "-"; break;
    case 3: out = "-i"; break;
    }
    for (std::uint32_t q = 0; q < n_; ++q) out.push_back(pauli_to_char(at(q)));
    return out;
  }

private:
  void check_index(std::uint32_t q) const {
    if (q >= n_) throw std::out_of_range("PauliString qubit out of range");
  }

  // Phase exponent of (P1 * P2) relative to the bare XOR of symplectic bits,
  // where each factor is written in the canonical form i^(x&z) X^x Z^z.
  static std::uint8_t factor_phase(bool x1, bool z1, bool x2, bool z2) {
    // Move Z^z1 past X^x2: contributes (-1)^(z1&x2) = i^(2*z1*x2). Canonical
    // re-normalization of the Y factors adds i^(x1&z1) i^(x2&z2) i^-(x&z out).
    int k = 2 * (z1 & x2);
    k += (x1 & z1) + (x2 & z2);
    k -= ((x1 ^ x2) & (z1 ^ z2));
    return static_cast<std::uint8_t>(((k % 4) + 4) & 3);
  }

  std::uint32_t n_ = 0;
  std::uint32_t x_ = 0;
  std::uint32_t z_ = 0;
  std::uint8_t phase_ = 0;
};

} // namespace qec
