// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qec/errors.hpp"

namespace qec {

enum class GateKind : std::uint8_t {
  I,
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  CX,
  CZ,
  Measure,
  Reset,
};

/// Number of qubit operands the kind acts on (1 or 2).
constexpr std::uint32_t arity_of(GateKind kind) {
  return (kind == GateKind::CX || kind == GateKind::CZ) ? 2u : 1u;
}

constexpr bool is_unitary(GateKind kind) {
  return kind != GateKind::Measure && kind != GateKind::Reset;
}

/// Textual mnemonic used by the circuit grammar.
constexpr std::string_view name_of(GateKind kind) {
  switch (kind) {
  case GateKind::I: return "id";
  case GateKind::H: return "h";
  case GateKind::X: return "x";
  case GateKind::Y: return "y";
  case GateKind::Z: return "z";
  case GateKind::S: return "s";
  case GateKind::Sdg: return "sdg";
  case GateKind::T: return "t";
  case GateKind::CX: return "cx";
  case GateKind::CZ: return "cz";
  case GateKind::Measure: return "measure";
  case GateKind::Reset: return "reset";
  }
  return "";
}

inline std::optional<GateKind> gate_from_name(std::string_view name) {
  using G = GateKind;
  for (G g : {G::I, G::H, G::X, G::Y, G::Z, G::S, G::Sdg, G::T, G::CX, G::CZ,
              G::Measure, G::Reset})
    if (name == name_of(g)) return g;
  return std::nullopt;
}

/// Classical guard on an operation: the op executes iff the value stored in
/// the inclusive clbit range [first, last] equals `value`, where bit k of
/// `value` corresponds to clbit first + k. `whole_register` records whether
/// the guard was written against the full register (affects serialization
/// only, not semantics).
struct Condition {
  std::uint32_t first = 0;
  std::uint32_t last = 0;
  std::uint64_t value = 0;
  bool whole_register = false;

  std::uint32_t width() const { return last - first + 1; }

  friend bool operator==(const Condition& a, const Condition& b) {
    return a.first == b.first && a.last == b.last && a.value == b.value;
  }
};

/// One circuit instruction. Unused operand slots are kept zeroed so that
/// structural comparison can look at every field. `noise_exempt` is advisory
/// metadata consumed by noise-aware backends; it does not participate in
/// equality and does not survive serialization.
struct Operation {
  GateKind kind = GateKind::I;
  std::uint32_t q0 = 0;
  std::uint32_t q1 = 0;
  std::uint32_t clbit = 0;
  std::optional<Condition> condition;
  bool noise_exempt = false;

  static Operation gate(GateKind kind, std::uint32_t q) {
    Operation op;
    op.kind = kind;
    op.q0 = q;
    return op;
  }

  static Operation gate(GateKind kind, std::uint32_t control,
                        std::uint32_t target) {
    Operation op;
    op.kind = kind;
    op.q0 = control;
    op.q1 = target;
    return op;
  }

  static Operation measure(std::uint32_t q, std::uint32_t c) {
    Operation op;
    op.kind = GateKind::Measure;
    op.q0 = q;
    op.clbit = c;
    return op;
  }

  static Operation reset(std::uint32_t q) {
    Operation op;
    op.kind = GateKind::Reset;
    op.q0 = q;
    return op;
  }

  std::uint32_t num_qubits() const { return arity_of(kind); }

  /// Qubit operands in listed order.
  std::array<std::uint32_t, 2> qubits() const { return {q0, q1}; }

  bool touches(std::uint32_t q) const {
    return q0 == q || (arity_of(kind) == 2 && q1 == q);
  }

  friend bool operator==(const Operation& a, const Operation& b) {
    return a.kind == b.kind && a.q0 == b.q0 &&
           (arity_of(a.kind) < 2 || a.q1 == b.q1) &&
           (a.kind != GateKind::Measure || a.clbit == b.clbit) &&
           a.condition == b.condition;
  }
};

/// A flat program over `num_qubits` qubits and `num_clbits` classical bits.
///
/// Bit-order convention used throughout the library: index 0 is the leftmost
/// character of an outcome string, and qubit q maps to bit q of a basis-state
/// index.
struct Circuit {
  std::uint32_t num_qubits = 0;
  std::uint32_t num_clbits = 0;
  std::string name;
  std::vector<Operation> ops;

  Circuit() = default;
  Circuit(std::uint32_t nq, std::uint32_t nc, std::string circuit_name = "")
      : num_qubits(nq), num_clbits(nc), name(std::move(circuit_name)) {}

  Circuit& add(Operation op) {
    check(op);
    ops.push_back(std::move(op));
    return *this;
  }

  Circuit& gate(GateKind kind, std::uint32_t q) {
    return add(Operation::gate(kind, q));
  }
  Circuit& gate(GateKind kind, std::uint32_t c, std::uint32_t t) {
    return add(Operation::gate(kind, c, t));
  }
  Circuit& i(std::uint32_t q) { return gate(GateKind::I, q); }
  Circuit& h(std::uint32_t q) { return gate(GateKind::H, q); }
  Circuit& x(std::uint32_t q) { return gate(GateKind::X, q); }
  Circuit& y(std::uint32_t q) { return gate(GateKind::Y, q); }
  Circuit& z(std::uint32_t q) { return gate(GateKind::Z, q); }
  Circuit& s(std::uint32_t q) { return gate(GateKind::S, q); }
  Circuit& sdg(std::uint32_t q) { return gate(GateKind::Sdg, q); }
  Circuit& t(std::uint32_t q) { return gate(GateKind::T, q); }
  Circuit& cx(std::uint32_t c, std::uint32_t t) {
    return gate(GateKind::CX, c, t);
  }
  Circuit& cz(std::uint32_t a, std::uint32_t b) {
    return gate(GateKind::CZ, a, b);
  }
  Circuit& measure(std::uint32_t q, std::uint32_t c) {
    return add(Operation::measure(q, c));
  }
  Circuit& reset(std::uint32_t q) { return add(Operation::reset(q)); }

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits == b.num_qubits && a.num_clbits == b.num_clbits &&
           a.ops == b.ops;
  }

private:
  void check(const Operation& op) const {
    if (op.q0 >= num_qubits ||
        (arity_of(op.kind) == 2 && op.q1 >= num_qubits))
      throw std::out_of_range("qubit operand out of range");
    if (arity_of(op.kind) == 2 && op.q0 == op.q1)
      throw std::invalid_argument("two-qubit gate requires distinct qubits");
    if (op.kind == GateKind::Measure && op.clbit >= num_clbits)
      throw std::out_of_range("clbit operand out of range");
    if (op.condition) {
      const Condition& c = *op.condition;
      if (c.first > c.last || c.last >= num_clbits)
        throw std::out_of_range("condition clbit range out of range");
      if (c.width() < 64 && (c.value >> c.width()) != 0)
        throw std::invalid_argument("condition value exceeds range width");
    }
  }
};

enum class IssueSeverity { Warning, Error };

struct ValidationIssue {
  IssueSeverity severity;
  std::size_t op_index;
  std::string message;
};

/// Structural well-formedness scan. Circuits built through Circuit::add are
/// valid by construction; this exists for programs assembled field-by-field
/// or deserialized from untrusted sources.
inline std::vector<ValidationIssue> validate(const Circuit& c) {
  std::vector<ValidationIssue> issues;
  auto err = [&](std::size_t i, std::string m) {
    issues.push_back({IssueSeverity::Error, i, std::move(m)});
  };
  auto warn = [&](std::size_t i, std::string m) {
    issues.push_back({IssueSeverity::Warning, i, std::move(m)});
  };
  std::vector<std::size_t> clbit_writes(c.num_clbits, 0);
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    const Operation& op = c.ops[i];
    if (op.q0 >= c.num_qubits)
      err(i, "qubit " + std::to_string(op.q0) + " out of range");
    if (arity_of(op.kind) == 2) {
      if (op.q1 >= c.num_qubits)
        err(i, "qubit " + std::to_string(op.q1) + " out of range");
      if (op.q0 == op.q1)
        err(i, "two-qubit gate with repeated operand q" +
                   std::to_string(op.q0));
    }
    if (op.kind == GateKind::Measure) {
      if (op.clbit >= c.num_clbits) {
        err(i, "clbit " + std::to_string(op.clbit) + " out of range");
      } else if (++clbit_writes[op.clbit] == 2) {
        warn(i, "clbit " + std::to_string(op.clbit) +
                    " written by more than one measurement");
      }
    }
    if (op.condition) {
      const Condition& g = *op.condition;
      if (g.first > g.last)
        err(i, "condition range is reversed");
      else if (g.last >= c.num_clbits)
        err(i, "condition clbit " + std::to_string(g.last) + " out of range");
      else if (g.width() < 64 && (g.value >> g.width()) != 0)
        err(i, "condition value does not fit the tested range");
    }
  }
  return issues;
}

/// n-qubit GHZ preparation followed by a full register readout:
/// H q0; CX q0->qk for every k; Measure qk -> ck.
inline Circuit ghz_benchmark(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("GHZ benchmark needs n >= 1");
  Circuit c(n, n, "ghz" + std::to_string(n));
  c.h(0);
  for (std::uint32_t q = 1; q < n; ++q) c.cx(0, q);
  for (std::uint32_t q = 0; q < n; ++q) c.measure(q, q);
  return c;
}

/// Inserts `count` identity ops immediately before the first measurement
/// (at the end when there is none), cycling round-robin over the qubits.
/// Identities are transparent to the ideal semantics but expose the circuit
/// to `count` additional noise events, which makes padded circuits useful as
/// depth benchmarks.
inline Circuit pad_dummy_ops(Circuit c, std::uint64_t count) {
  if (c.num_qubits == 0 && count > 0)
    throw std::invalid_argument("cannot pad a circuit without qubits");
  std::size_t insert_at = c.ops.size();
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    if (c.ops[i].kind == GateKind::Measure) {
      insert_at = i;
      break;
    }
  }
  std::vector<Operation> dummies;
  dummies.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k)
    dummies.push_back(Operation::gate(
        GateKind::I, static_cast<std::uint32_t>(k % c.num_qubits)));
  c.ops.insert(c.ops.begin() + static_cast<std::ptrdiff_t>(insert_at),
               dummies.begin(), dummies.end());
  return c;
}

} // namespace qec
