// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qec/circuit.hpp"
#include "qec/dense_sim.hpp"
#include "qec/ecc/catalog.hpp"
#include "qec/ecc/scheme.hpp"
#include "qec/errors.hpp"

namespace qec {

/// Result of the encoding pipeline: the physical circuit together with the
/// layout that explains its registers.
struct EncodedCircuit {
  Circuit circuit;
  LogicalLayout layout;
};

/// Shared state threaded through the compiler passes. `groups` collects one
/// entry per logical operation mapped so far (its physical ops plus the
/// logical qubits it touched); measurements are deferred into
/// `pending_measures` so the decode pass can emit them last.
struct EccCompilation {
  const EccScheme* scheme = nullptr;
  EccConfig config;
  LogicalLayout layout;
  Circuit original;
  Circuit encoded;
  /// When set, everything the compiler adds on its own (encoders, syndrome
  /// rounds, corrections, decoders, deferred readouts) is marked noise
  /// exempt, leaving only the mapped logical fragments exposed to noise.
  bool ideal_overhead = false;

  struct Group {
    std::vector<Operation> ops;
    std::vector<std::uint32_t> logicals;
  };
  std::vector<Group> groups;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pending_measures;
};

namespace detail {

/// Shifts a block-local op into the physical block of `logical`. Qubits move
/// by whole blocks; clbits (syndrome measurements and the conditions that
/// read them) move into the block's syndrome window.
inline Operation globalize(Operation op, const LogicalLayout& layout,
                           std::uint32_t logical) {
  const std::uint32_t qshift = logical * layout.block_size();
  op.q0 += qshift;
  if (arity_of(op.kind) == 2) op.q1 += qshift;
  if (op.kind == GateKind::Measure)
    op.clbit = layout.syndrome_clbit(logical, op.clbit);
  if (op.condition) {
    op.condition->first = layout.syndrome_clbit(logical, op.condition->first);
    op.condition->last = layout.syndrome_clbit(logical, op.condition->last);
  }
  return op;
}

inline void append_overhead_op(EccCompilation& comp, Operation op) {
  op.noise_exempt = op.noise_exempt || comp.ideal_overhead;
  comp.encoded.add(std::move(op));
}

inline void append_syndrome_round(EccCompilation& comp, std::uint32_t logical) {
  for (const Operation& op : comp.scheme->syndrome_block())
    append_overhead_op(comp, globalize(op, comp.layout, logical));
}

} // namespace detail

/// Pass 1: fixes the layout and prepares every logical qubit in its code
/// block by running the encoder on it.
inline EccCompilation encode_pass(const Circuit& circuit,
                                  const EccScheme& scheme,
                                  const EccConfig& config,
                                  bool ideal_overhead = false) {
  if (config.correction_frequency == 0)
    throw std::invalid_argument("correction_frequency must be at least 1");

  EccCompilation comp;
  comp.scheme = &scheme;
  comp.config = config;
  comp.ideal_overhead = ideal_overhead;
  comp.original = circuit;
  comp.layout.num_logical = circuit.num_qubits;
  comp.layout.code_qubits = scheme.code_qubits;
  comp.layout.ancilla_qubits = scheme.ancilla_qubits;
  comp.layout.syndrome_bits = scheme.syndrome_bits();
  comp.layout.original_clbits = circuit.num_clbits;
  comp.layout.readout = scheme.readout;

  comp.encoded = Circuit(comp.layout.total_qubits(), comp.layout.total_clbits(),
                         circuit.name.empty()
                             ? scheme.name
                             : circuit.name + "+" + scheme.name);
  for (std::uint32_t l = 0; l < comp.layout.num_logical; ++l)
    for (const Operation& op : scheme.encoder)
      detail::append_overhead_op(comp, detail::globalize(op, comp.layout, l));
  return comp;
}

/// Pass 2: translates each logical operation into its physical fragment.
/// Measurements are deferred; conditional operations, resets, gates outside
/// the code's logical gate set, and any use of a qubit after its measurement
/// are rejected.
inline void map_operations_pass(EccCompilation& comp) {
  const EccScheme& scheme = *comp.scheme;
  const LogicalLayout& layout = comp.layout;
  std::vector<bool> measured(layout.num_logical, false);

  for (const Operation& op : comp.original.ops) {
    if (op.condition)
      throw UnsupportedGateError(
          "conditional operations cannot be encoded");
    if (op.kind == GateKind::Reset)
      throw UnsupportedGateError("reset operations cannot be encoded");
    if (op.kind == GateKind::Measure) {
      comp.pending_measures.emplace_back(op.q0, op.clbit);
      measured[op.q0] = true;
      continue;
    }
    if (!scheme.supports(op.kind))
      throw UnsupportedGateError("gate '" + std::string(name_of(op.kind)) +
                                 "' is not supported by code '" + scheme.name +
                                 "' (supported: " + scheme.supported_names() +
                                 ")");
    for (std::uint32_t q : op.qubits())
      if (measured[q])
        throw Error("qubit " + std::to_string(q) +
                    " is used after its measurement; measurements must be "
                    "terminal in encoded circuits");

    EccCompilation::Group group;
    if (arity_of(op.kind) == 1) {
      group.logicals = {op.q0};
      for (Operation frag : scheme.logical_1q.at(op.kind)) {
        frag.noise_exempt = op.noise_exempt;
        group.ops.push_back(detail::globalize(frag, layout, op.q0));
      }
    } else {
      group.logicals = {op.q0, op.q1};
      for (std::uint32_t k = 0; k < scheme.code_qubits; ++k) {
        std::uint32_t a = layout.data_qubit(op.q0, k);
        std::uint32_t b = layout.data_qubit(op.q1, k);
        if (op.kind == GateKind::CX && scheme.cx_reversed) std::swap(a, b);
        Operation frag = Operation::gate(op.kind, a, b);
        frag.noise_exempt = op.noise_exempt;
        group.ops.push_back(frag);
      }
    }
    comp.groups.push_back(std::move(group));
  }
}

/// Pass 3: emits the mapped fragments and interleaves syndrome-extraction
/// rounds. A logical qubit gets a round once it has taken part in
/// `correction_frequency` logical operations since its last round, and one
/// final round right before decoding when `correct_before_measure` is set.
inline void insert_correction_pass(EccCompilation& comp) {
  std::vector<std::uint64_t> uses(comp.layout.num_logical, 0);
  for (const EccCompilation::Group& group : comp.groups) {
    for (const Operation& op : group.ops) comp.encoded.add(op);
    std::vector<std::uint32_t> due;
    for (std::uint32_t l : group.logicals)
      if (++uses[l] >= comp.config.correction_frequency) due.push_back(l);
    std::sort(due.begin(), due.end());
    for (std::uint32_t l : due) {
      detail::append_syndrome_round(comp, l);
      uses[l] = 0;
    }
  }
  if (comp.config.correct_before_measure)
    for (std::uint32_t l = 0; l < comp.layout.num_logical; ++l)
      detail::append_syndrome_round(comp, l);
}

/// Pass 4: undoes the encoder on every block and replays the deferred
/// measurements against the readout qubits, ordered by original qubit index.
inline void decode_pass(EccCompilation& comp) {
  for (std::uint32_t l = 0; l < comp.layout.num_logical; ++l)
    for (const Operation& op : comp.scheme->decoder())
      detail::append_overhead_op(comp, detail::globalize(op, comp.layout, l));

  std::stable_sort(comp.pending_measures.begin(), comp.pending_measures.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [q, c] : comp.pending_measures)
    detail::append_overhead_op(
        comp, Operation::measure(comp.layout.readout_qubit(q), c));
}

inline EncodedCircuit apply_ecc(const Circuit& circuit, const EccScheme& scheme,
                                const EccConfig& config,
                                bool ideal_overhead = false) {
  EccCompilation comp = encode_pass(circuit, scheme, config, ideal_overhead);
  map_operations_pass(comp);
  insert_correction_pass(comp);
  decode_pass(comp);
  return EncodedCircuit{std::move(comp.encoded), comp.layout};
}

inline EncodedCircuit apply_ecc(const Circuit& circuit,
                                const EccConfig& config,
                                bool ideal_overhead = false) {
  return apply_ecc(circuit, make_scheme(config.code), config, ideal_overhead);
}

/// Exercises one code block end to end: prepare a magic state on the readout
/// qubit, encode, inject a single-qubit Pauli error, run one
/// syndrome-extraction round with its conditional corrections, decode, and
/// undo the preparation. Returns true when the final readout is |0> with
/// certainty, i.e. when the round corrected the injected error exactly.
inline bool correct_single_error_oracle(const EccScheme& scheme, Pauli error,
                                        std::uint32_t position) {
  const std::uint32_t readout = scheme.readout;
  Circuit c(scheme.block_size(), 1 + scheme.syndrome_bits());
  c.h(readout).t(readout);
  for (const Operation& op : scheme.encoder) c.add(op);
  if (error != Pauli::I) {
    GateKind kind = error == Pauli::X   ? GateKind::X
                    : error == Pauli::Y ? GateKind::Y
                                        : GateKind::Z;
    c.gate(kind, position);
  }
  for (Operation op : scheme.syndrome_block()) {
    if (op.kind == GateKind::Measure) op.clbit += 1;
    if (op.condition) {
      op.condition->first += 1;
      op.condition->last += 1;
    }
    c.add(op);
  }
  for (const Operation& op : scheme.decoder()) c.add(op);
  c.t(readout).s(readout).z(readout).h(readout);
  c.measure(readout, 0);

  OutcomeDistribution out = run_density(c).marginal(1);
  return std::abs(out.prob("0") - 1.0) < 1e-9;
}

} // namespace qec
