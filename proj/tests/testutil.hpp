#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qec/circuit.hpp"

namespace qec::testing {

inline const std::vector<GateKind>& all_gate_kinds() {
  static const std::vector<GateKind> kinds = {
      GateKind::I,  GateKind::H,  GateKind::X,       GateKind::Y,
      GateKind::Z,  GateKind::S,  GateKind::Sdg,     GateKind::T,
      GateKind::CX, GateKind::CZ, GateKind::Measure, GateKind::Reset};
  return kinds;
}

inline const std::vector<GateKind>& clifford_gate_kinds() {
  static const std::vector<GateKind> kinds = {
      GateKind::I,  GateKind::H,  GateKind::X,       GateKind::Y,
      GateKind::Z,  GateKind::S,  GateKind::Sdg,
      GateKind::CX, GateKind::CZ, GateKind::Measure, GateKind::Reset};
  return kinds;
}

/// Draws a random structurally valid circuit. Conditions appear with low
/// probability on unitary gates.
inline Circuit random_circuit(std::mt19937_64& rng, std::uint32_t max_qubits,
                              std::uint32_t max_clbits, std::size_t num_ops,
                              bool with_conditions = true,
                              const std::vector<GateKind>& kinds =
                                  all_gate_kinds()) {
  std::uniform_int_distribution<std::uint32_t> nq_dist(1, max_qubits);
  std::uniform_int_distribution<std::uint32_t> nc_dist(1, max_clbits);
  Circuit c(nq_dist(rng), nc_dist(rng));

  std::uniform_int_distribution<std::size_t> kind_dist(0, kinds.size() - 1);
  std::uniform_int_distribution<std::uint32_t> q_dist(0, c.num_qubits - 1);
  std::uniform_int_distribution<std::uint32_t> c_dist(0, c.num_clbits - 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);

  for (std::size_t i = 0; i < num_ops; ++i) {
    GateKind kind = kinds[kind_dist(rng)];
    if (arity_of(kind) == 2 && c.num_qubits < 2) kind = GateKind::X;
    Operation op;
    op.kind = kind;
    op.q0 = q_dist(rng);
    if (arity_of(kind) == 2) {
      do {
        op.q1 = q_dist(rng);
      } while (op.q1 == op.q0);
    }
    if (kind == GateKind::Measure) op.clbit = c_dist(rng);
    if (with_conditions && is_unitary(kind) && u(rng) < 0.15) {
      Condition g;
      g.first = c_dist(rng);
      g.last = g.first + static_cast<std::uint32_t>(
                             u(rng) * (c.num_clbits - g.first));
      if (g.last >= c.num_clbits) g.last = c.num_clbits - 1;
      std::uint32_t width = g.last - g.first + 1;
      std::uint64_t bound = width >= 64 ? ~0ULL : ((1ULL << width) - 1);
      g.value = rng() & bound;
      g.whole_register = (g.first == 0 && g.last + 1 == c.num_clbits &&
                          u(rng) < 0.5);
      op.condition = g;
    }
    c.add(op);
  }
  return c;
}

} // namespace qec::testing
