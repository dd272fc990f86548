// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/ecc/scheme.hpp"
#include "qec/errors.hpp"
#include "qec/pauli.hpp"

namespace qec {

inline std::vector<std::string> list_codes() {
  return {"bitflip3", "laflamme5", "shor9", "steane7", "surface_d3"};
}

namespace detail {

inline PauliString single_pauli(std::uint32_t n, std::uint32_t q, Pauli p) {
  PauliString s(n);
  s.set(q, p);
  return s;
}

inline std::vector<Operation> ops_from_pauli(const PauliString& p) {
  std::vector<Operation> ops;
  for (std::uint32_t q = 0; q < p.num_qubits(); ++q) {
    switch (p.at(q)) {
    case Pauli::I:
      break;
    case Pauli::X:
      ops.push_back(Operation::gate(GateKind::X, q));
      break;
    case Pauli::Y:
      ops.push_back(Operation::gate(GateKind::Y, q));
      break;
    case Pauli::Z:
      ops.push_back(Operation::gate(GateKind::Z, q));
      break;
    }
  }
  return ops;
}

inline std::vector<Operation> transversal(GateKind kind, std::uint32_t n) {
  std::vector<Operation> ops;
  for (std::uint32_t q = 0; q < n; ++q) ops.push_back(Operation::gate(kind, q));
  return ops;
}

/// Rebuilds the stabilizer generators, logical operators and decoder table
/// from the encoder alone, then proves the construction consistent. The
/// encoder maps |psi> on the readout qubit (all other data qubits in |0>)
/// to the code space, so the code is stabilized by the conjugated Z of every
/// non-readout qubit and the logical operators are the conjugated X and Z of
/// the readout qubit.
inline void derive_code_structure(EccScheme& scheme) {
  const std::uint32_t n = scheme.code_qubits;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok)
      throw Error("code construction check failed for '" + scheme.name +
                  "': " + what);
  };

  scheme.generators.clear();
  for (std::uint32_t q = 0; q < n; ++q) {
    if (q == scheme.readout) continue;
    PauliString g =
        conjugate_pauli(single_pauli(n, q, Pauli::Z), scheme.encoder);
    check(g.phase() == 0, "generator for qubit " + std::to_string(q) +
                              " acquired a sign");
    scheme.generators.push_back(g);
  }
  scheme.logical_x =
      conjugate_pauli(single_pauli(n, scheme.readout, Pauli::X), scheme.encoder);
  scheme.logical_z =
      conjugate_pauli(single_pauli(n, scheme.readout, Pauli::Z), scheme.encoder);
  check(scheme.logical_x.phase() == 0, "logical X acquired a sign");
  check(scheme.logical_z.phase() == 0, "logical Z acquired a sign");
  check(!scheme.logical_x.commutes_with(scheme.logical_z),
        "logical X and Z must anticommute");

  for (std::size_t a = 0; a < scheme.generators.size(); ++a) {
    for (std::size_t b = a + 1; b < scheme.generators.size(); ++b)
      check(scheme.generators[a].commutes_with(scheme.generators[b]),
            "generators must commute pairwise");
    check(scheme.generators[a].commutes_with(scheme.logical_x) &&
              scheme.generators[a].commutes_with(scheme.logical_z),
          "logical operators must commute with every generator");
  }

  auto syndrome_of = [&](const PauliString& e) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < scheme.generators.size(); ++k)
      if (!e.commutes_with(scheme.generators[k])) s |= std::uint64_t{1} << k;
    return s;
  };

  scheme.table = DecoderTable{};
  for (Pauli p : {Pauli::X, Pauli::Z, Pauli::Y}) {
    for (std::uint32_t q = 0; q < n; ++q) {
      const std::uint64_t s = syndrome_of(single_pauli(n, q, p));
      if (s != 0 && scheme.table.find(s) == nullptr)
        scheme.table.add(s, {{p, q}});
    }
  }

  for (Pauli p : {Pauli::X, Pauli::Z, Pauli::Y}) {
    if (!scheme.corrects_all_paulis && p != Pauli::X) continue;
    for (std::uint32_t q = 0; q < n; ++q) {
      const PauliString error = single_pauli(n, q, p);
      const std::uint64_t s = syndrome_of(error);
      check(s != 0, "single error must be detectable");
      const DecoderTable::Correction* corr = scheme.table.find(s);
      check(corr != nullptr, "single error must have a table entry");
      PauliString residual = error;
      for (const auto& [cp, cq] : *corr)
        residual = residual * single_pauli(n, cq, cp);
      check(syndrome_of(residual) == 0 &&
                residual.commutes_with(scheme.logical_x) &&
                residual.commutes_with(scheme.logical_z),
            "correction must return the state to the code space");
    }
  }
}

} // namespace detail

/// Builds one of the known codes by name. The returned scheme has been
/// verified at construction: the generators commute, carry no signs, and the
/// decoder table provably corrects every single-qubit error the code claims
/// to handle.
inline EccScheme make_scheme(const std::string& name) {
  using detail::transversal;
  auto cx = [](std::uint32_t c, std::uint32_t t) {
    return Operation::gate(GateKind::CX, c, t);
  };
  auto h = [](std::uint32_t q) { return Operation::gate(GateKind::H, q); };

  EccScheme s;
  s.name = name;
  if (name == "bitflip3") {
    s.code_qubits = 3;
    s.ancilla_qubits = 2;
    s.distance = 3;
    s.readout = 0;
    s.corrects_all_paulis = false;
    s.supported = {GateKind::I, GateKind::X, GateKind::CX, GateKind::Measure};
    s.encoder = {cx(0, 1), cx(0, 2)};
    s.generator_ancilla = {0, 1};
  } else if (name == "shor9") {
    s.code_qubits = 9;
    s.ancilla_qubits = 1;
    s.distance = 3;
    s.readout = 0;
    s.supported = {GateKind::I, GateKind::X, GateKind::Z, GateKind::CX,
                   GateKind::Measure};
    s.encoder = {cx(0, 3), cx(0, 6), h(0),     h(3),     h(6),    cx(0, 1),
                 cx(0, 2), cx(3, 4), cx(3, 5), cx(6, 7), cx(6, 8)};
    s.generator_ancilla.assign(8, 0);
    s.cx_reversed = true;
  } else if (name == "steane7") {
    s.code_qubits = 7;
    s.ancilla_qubits = 1;
    s.distance = 3;
    s.readout = 2;
    s.supported = {GateKind::I,  GateKind::X,  GateKind::Y,
                   GateKind::Z,  GateKind::H,  GateKind::CX,
                   GateKind::CZ, GateKind::Measure};
    s.encoder = {cx(2, 4), cx(2, 5), h(0),     cx(0, 2), cx(0, 4),
                 cx(0, 6), h(1),     cx(1, 2), cx(1, 5), cx(1, 6),
                 h(3),     cx(3, 4), cx(3, 5), cx(3, 6)};
    s.generator_ancilla.assign(6, 0);
  } else if (name == "surface_d3") {
    s.code_qubits = 9;
    s.ancilla_qubits = 1;
    s.distance = 3;
    s.readout = 2;
    s.supported = {GateKind::I, GateKind::X, GateKind::Z, GateKind::Measure};
    s.encoder = {cx(2, 5), cx(2, 8), h(0),     cx(0, 2), cx(0, 3), cx(0, 5),
                 cx(0, 7), cx(0, 8), h(1),     cx(1, 2), h(4),     cx(4, 5),
                 cx(4, 7), cx(4, 8), h(6),     cx(6, 7)};
    s.generator_ancilla.assign(8, 0);
  } else if (name == "laflamme5") {
    s.code_qubits = 5;
    s.ancilla_qubits = 1;
    s.distance = 3;
    s.readout = 0;
    s.supported = {GateKind::I, GateKind::X, GateKind::Z, GateKind::Measure};
    s.encoder = {cx(0, 2), h(0),     h(1),     cx(0, 3),
                 cx(1, 0), cx(0, 2), cx(1, 4), h(1),
                 h(0),     cx(1, 3), cx(0, 4),
                 Operation::gate(GateKind::X, 3)};
    s.generator_ancilla.assign(4, 0);
  } else {
    std::string available;
    for (const std::string& code : list_codes()) {
      if (!available.empty()) available += ", ";
      available += code;
    }
    throw Error("unknown code '" + name + "' (available: " + available + ")");
  }

  detail::derive_code_structure(s);

  s.logical_1q[GateKind::I] = transversal(GateKind::I, s.code_qubits);
  if (name == "steane7") {
    for (GateKind kind :
         {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H})
      s.logical_1q[kind] = transversal(kind, s.code_qubits);
  } else {
    if (s.supports(GateKind::X))
      s.logical_1q[GateKind::X] = detail::ops_from_pauli(s.logical_x);
    if (s.supports(GateKind::Z))
      s.logical_1q[GateKind::Z] = detail::ops_from_pauli(s.logical_z);
  }
  return s;
}

} // namespace qec
