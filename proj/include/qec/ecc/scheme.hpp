// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/errors.hpp"
#include "qec/pauli.hpp"

namespace qec {

/// Options of the encoding pipeline.
struct EccConfig {
  std::string code = "steane7";
  /// A fresh round of syndrome extraction is inserted for a logical qubit
  /// after it has participated in this many logical operations.
  std::uint64_t correction_frequency = 500;
  /// Always run one extra correction round per logical qubit right before
  /// the final readout.
  bool correct_before_measure = true;
};

/// Geometry of an encoded circuit: how logical qubits map to physical qubit
/// blocks and where the syndrome record lives in the classical register.
/// Block l occupies physical qubits [l * block_size(), (l+1) * block_size()),
/// data first, ancillas after. The original clbits keep their indices; the
/// per-block syndrome bits follow them.
struct LogicalLayout {
  std::uint32_t num_logical = 0;
  std::uint32_t code_qubits = 0;
  std::uint32_t ancilla_qubits = 0;
  std::uint32_t syndrome_bits = 0;
  std::uint32_t original_clbits = 0;
  std::uint32_t readout = 0;

  std::uint32_t block_size() const { return code_qubits + ancilla_qubits; }
  std::uint32_t total_qubits() const { return num_logical * block_size(); }
  std::uint32_t total_clbits() const {
    return original_clbits + num_logical * syndrome_bits;
  }
  std::uint32_t data_qubit(std::uint32_t logical, std::uint32_t k) const {
    return logical * block_size() + k;
  }
  std::uint32_t ancilla_qubit(std::uint32_t logical, std::uint32_t a) const {
    return logical * block_size() + code_qubits + a;
  }
  std::uint32_t readout_qubit(std::uint32_t logical) const {
    return data_qubit(logical, readout);
  }
  std::uint32_t syndrome_clbit(std::uint32_t logical, std::uint32_t s) const {
    return original_clbits + logical * syndrome_bits + s;
  }
  std::uint32_t logical_of(std::uint32_t physical) const {
    return physical / block_size();
  }
};

/// Syndrome-to-correction lookup. A syndrome value packs one bit per
/// generator (bit k answers "does the error anticommute with generator k").
/// Unlisted syndromes decode to "apply nothing".
class DecoderTable {
public:
  using Correction = std::vector<std::pair<Pauli, std::uint32_t>>;

  void add(std::uint64_t syndrome, Correction correction) {
    entries_.emplace(syndrome, std::move(correction));
  }

  const Correction* find(std::uint64_t syndrome) const {
    auto it = entries_.find(syndrome);
    return it == entries_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return entries_.size(); }
  const std::map<std::uint64_t, Correction>& entries() const {
    return entries_;
  }

private:
  std::map<std::uint64_t, Correction> entries_;
};

namespace detail {

inline void conjugation_step(std::uint32_t& x, std::uint32_t& z,
                             std::uint32_t& r, GateKind kind,
                             std::uint32_t q0, std::uint32_t q1) {
  auto bit = [](std::uint32_t v, std::uint32_t q) -> std::uint32_t {
    return (v >> q) & 1u;
  };
  switch (kind) {
  case GateKind::I:
    return;
  case GateKind::H: {
    r ^= bit(x, q0) & bit(z, q0);
    std::uint32_t diff = (bit(x, q0) ^ bit(z, q0)) << q0;
    x ^= diff;
    z ^= diff;
    return;
  }
  case GateKind::S:
    r ^= bit(x, q0) & bit(z, q0);
    z ^= bit(x, q0) << q0;
    return;
  case GateKind::Sdg:
    r ^= bit(x, q0) & (1u ^ bit(z, q0));
    z ^= bit(x, q0) << q0;
    return;
  case GateKind::X:
    r ^= bit(z, q0);
    return;
  case GateKind::Y:
    r ^= bit(x, q0) ^ bit(z, q0);
    return;
  case GateKind::Z:
    r ^= bit(x, q0);
    return;
  case GateKind::CX: {
    std::uint32_t xc = bit(x, q0), zc = bit(z, q0);
    std::uint32_t xt = bit(x, q1), zt = bit(z, q1);
    r ^= xc & zt & (1u ^ xt ^ zc);
    x ^= xc << q1;
    z ^= zt << q0;
    return;
  }
  case GateKind::CZ:
    conjugation_step(x, z, r, GateKind::H, q1, 0);
    conjugation_step(x, z, r, GateKind::CX, q0, q1);
    conjugation_step(x, z, r, GateKind::H, q1, 0);
    return;
  default:
    throw UnsupportedGateError("cannot conjugate a Pauli through '" +
                               std::string(name_of(kind)) + "'");
  }
}

} // namespace detail

/// Conjugates P through one Clifford operation: returns U P U^dagger. Input
/// and output carry a real sign; the update rules mirror the stabilizer
/// tableau ones.
inline PauliString conjugate_pauli(PauliString p, const Operation& op) {
  if (p.phase() != 0 && p.phase() != 2)
    throw std::invalid_argument("conjugation needs a real-signed Pauli");
  std::uint32_t x = p.x_bits();
  std::uint32_t z = p.z_bits();
  std::uint32_t r = p.phase() == 2 ? 1 : 0;
  detail::conjugation_step(x, z, r, op.kind, op.q0, op.q1);

  PauliString out(p.num_qubits());
  for (std::uint32_t q = 0; q < p.num_qubits(); ++q) {
    bool xb = (x >> q) & 1u, zb = (z >> q) & 1u;
    out.set(q, xb && zb ? Pauli::Y : xb ? Pauli::X : zb ? Pauli::Z : Pauli::I);
  }
  out.set_phase(r ? 2 : 0);
  return out;
}

inline PauliString conjugate_pauli(PauliString p,
                                   const std::vector<Operation>& ops) {
  for (const Operation& op : ops) p = conjugate_pauli(p, op);
  return p;
}

/// A concrete error-correcting code plus everything the compiler needs: the
/// encoder fragment, the derived stabilizer generators and logical
/// operators, the decoder table, and the set of logical gates the code can
/// realize on encoded blocks.
struct EccScheme {
  std::string name;
  std::uint32_t code_qubits = 0;
  std::uint32_t ancilla_qubits = 0;
  std::uint32_t distance = 0;
  std::uint32_t readout = 0;
  bool corrects_all_paulis = true;
  std::vector<GateKind> supported;
  std::vector<Operation> encoder;
  std::vector<std::uint32_t> generator_ancilla;
  std::vector<PauliString> generators;
  PauliString logical_x;
  PauliString logical_z;
  DecoderTable table;
  /// Block-local ops realizing each supported single-qubit logical gate.
  std::map<GateKind, std::vector<Operation>> logical_1q;
  /// Physical CX direction: when true, the logical CX(a, b) uses physical
  /// gates with control in block b and target in block a.
  bool cx_reversed = false;

  std::uint32_t syndrome_bits() const {
    return static_cast<std::uint32_t>(generators.size());
  }
  std::uint32_t block_size() const { return code_qubits + ancilla_qubits; }

  bool supports(GateKind kind) const {
    for (GateKind g : supported)
      if (g == kind) return true;
    return false;
  }

  std::string supported_names() const {
    std::string out;
    for (GateKind g : supported) {
      if (!out.empty()) out += ", ";
      out += name_of(g);
    }
    return out;
  }

  /// Inverse of the encoder. Every encoder op in the catalog is an
  /// involution, so reversing the order suffices.
  std::vector<Operation> decoder() const {
    return {encoder.rbegin(), encoder.rend()};
  }

  /// One syndrome-extraction round over block-local indices: qubits in
  /// [0, block_size()), syndrome clbits in [0, syndrome_bits()). Generator k
  /// is read out through its ancilla with an H / controlled-Pauli / H
  /// interferometer and lands in clbit k; the correction ops that follow are
  /// conditioned on the complete syndrome.
  std::vector<Operation> syndrome_block() const {
    std::vector<Operation> ops;
    for (std::uint32_t k = 0; k < syndrome_bits(); ++k) {
      const PauliString& g = generators[k];
      const std::uint32_t anc = code_qubits + generator_ancilla[k];
      ops.push_back(Operation::reset(anc));
      ops.push_back(Operation::gate(GateKind::H, anc));
      for (std::uint32_t q = 0; q < code_qubits; ++q) {
        switch (g.at(q)) {
        case Pauli::I:
          break;
        case Pauli::X:
          ops.push_back(Operation::gate(GateKind::CX, anc, q));
          break;
        case Pauli::Z:
          ops.push_back(Operation::gate(GateKind::CZ, anc, q));
          break;
        case Pauli::Y:
          ops.push_back(Operation::gate(GateKind::Sdg, q));
          ops.push_back(Operation::gate(GateKind::CX, anc, q));
          ops.push_back(Operation::gate(GateKind::S, q));
          break;
        }
      }
      ops.push_back(Operation::gate(GateKind::H, anc));
      ops.push_back(Operation::measure(anc, k));
    }
    for (const auto& [syndrome, correction] : table.entries()) {
      for (const auto& [pauli, q] : correction) {
        GateKind kind = pauli == Pauli::X   ? GateKind::X
                        : pauli == Pauli::Y ? GateKind::Y
                                            : GateKind::Z;
        Operation op = Operation::gate(kind, q);
        op.condition = Condition{0, syndrome_bits() - 1, syndrome, false};
        ops.push_back(op);
      }
    }
    return ops;
  }
};

} // namespace qec
