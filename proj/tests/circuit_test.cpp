#include <gtest/gtest.h>

#include "qec/circuit.hpp"

using namespace qec;

TEST(Circuit, BuilderProducesCanonicalOperations) {
  Circuit c(3, 2);
  c.h(0).cx(0, 1).measure(1, 0).reset(2);
  ASSERT_EQ(c.ops.size(), 4u);
  EXPECT_EQ(c.ops[0].kind, GateKind::H);
  EXPECT_EQ(c.ops[1].q1, 1u);
  EXPECT_EQ(c.ops[2].clbit, 0u);
  EXPECT_EQ(c.ops[3].kind, GateKind::Reset);
}

TEST(Circuit, AddRejectsOutOfRangeOperands) {
  Circuit c(2, 1);
  EXPECT_THROW(c.h(2), std::out_of_range);
  EXPECT_THROW(c.cx(0, 2), std::out_of_range);
  EXPECT_THROW(c.measure(0, 1), std::out_of_range);
  EXPECT_THROW(c.cx(1, 1), std::invalid_argument);
}

TEST(Circuit, AddRejectsBadConditions) {
  Circuit c(1, 2);
  Operation op = Operation::gate(GateKind::X, 0);
  op.condition = Condition{0, 2, 0, false};
  EXPECT_THROW(c.add(op), std::out_of_range);
  op.condition = Condition{1, 0, 0, false};
  EXPECT_THROW(c.add(op), std::out_of_range);
  op.condition = Condition{0, 1, 4, false};
  EXPECT_THROW(c.add(op), std::invalid_argument);
  op.condition = Condition{0, 1, 3, false};
  EXPECT_NO_THROW(c.add(op));
}

TEST(Circuit, EqualityIsStructuralAndIgnoresNamesAndExemptions) {
  Circuit a(2, 2, "left");
  a.h(0).cx(0, 1).measure(0, 0);
  Circuit b(2, 2, "right");
  b.h(0).cx(0, 1).measure(0, 0);
  EXPECT_EQ(a, b);

  b.ops[1].noise_exempt = true;
  EXPECT_EQ(a, b);

  b.ops[1] = Operation::gate(GateKind::CZ, 0, 1);
  EXPECT_NE(a, b);

  Circuit wider(3, 2);
  wider.h(0).cx(0, 1).measure(0, 0);
  EXPECT_NE(a, wider);
}

TEST(Circuit, EqualityComparesConditions) {
  Circuit a(1, 2), b(1, 2);
  Operation op = Operation::gate(GateKind::X, 0);
  op.condition = Condition{0, 1, 2, false};
  a.add(op);
  b.add(op);
  EXPECT_EQ(a, b);
  b.ops[0].condition->value = 1;
  EXPECT_NE(a, b);
  b.ops[0].condition = std::nullopt;
  EXPECT_NE(a, b);
}

TEST(Validate, FlagsOutOfRangeAndRepeatedOperands) {
  Circuit c;
  c.num_qubits = 2;
  c.num_clbits = 1;
  c.ops.push_back(Operation::gate(GateKind::H, 5));
  c.ops.push_back(Operation::gate(GateKind::CX, 1, 1));
  c.ops.push_back(Operation::measure(0, 3));
  auto issues = validate(c);
  ASSERT_EQ(issues.size(), 3u);
  for (const auto& issue : issues)
    EXPECT_EQ(issue.severity, IssueSeverity::Error);
  EXPECT_EQ(issues[0].op_index, 0u);
  EXPECT_EQ(issues[1].op_index, 1u);
  EXPECT_EQ(issues[2].op_index, 2u);
}

TEST(Validate, WarnsOnDoubleMeasurementIntoSameClbit) {
  Circuit c(2, 1);
  c.measure(0, 0).measure(1, 0);
  auto issues = validate(c);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].severity, IssueSeverity::Warning);
  EXPECT_EQ(issues[0].op_index, 1u);
}

TEST(Validate, AcceptsWellFormedCircuits) {
  Circuit c(3, 3);
  c.h(0).cx(0, 1).cx(0, 2);
  for (std::uint32_t q = 0; q < 3; ++q) c.measure(q, q);
  EXPECT_TRUE(validate(c).empty());
}

TEST(GhzBenchmark, BuildsFanOutPlusFullReadout) {
  Circuit c = ghz_benchmark(4);
  EXPECT_EQ(c.num_qubits, 4u);
  EXPECT_EQ(c.num_clbits, 4u);
  ASSERT_EQ(c.ops.size(), 8u);
  EXPECT_EQ(c.ops[0].kind, GateKind::H);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(c.ops[k].kind, GateKind::CX);
    EXPECT_EQ(c.ops[k].q0, 0u);
    EXPECT_EQ(c.ops[k].q1, static_cast<std::uint32_t>(k));
  }
  for (int k = 4; k < 8; ++k) EXPECT_EQ(c.ops[k].kind, GateKind::Measure);
  EXPECT_THROW(ghz_benchmark(0), std::invalid_argument);
}

TEST(PadDummyOps, InsertsIdentitiesBeforeFirstMeasurement) {
  Circuit c = ghz_benchmark(3);
  Circuit padded = pad_dummy_ops(c, 7);
  ASSERT_EQ(padded.ops.size(), c.ops.size() + 7);
  for (int k = 3; k < 10; ++k) {
    EXPECT_EQ(padded.ops[k].kind, GateKind::I);
    EXPECT_EQ(padded.ops[k].q0, static_cast<std::uint32_t>((k - 3) % 3));
  }
  EXPECT_EQ(padded.ops[10].kind, GateKind::Measure);
}

TEST(PadDummyOps, AppendsWhenThereIsNoMeasurement) {
  Circuit c(2, 0);
  c.h(0).cx(0, 1);
  Circuit padded = pad_dummy_ops(c, 3);
  ASSERT_EQ(padded.ops.size(), 5u);
  EXPECT_EQ(padded.ops.back().kind, GateKind::I);
}

TEST(GateKindMeta, NamesRoundTrip) {
  for (GateKind g :
       {GateKind::I, GateKind::H, GateKind::X, GateKind::Y, GateKind::Z,
        GateKind::S, GateKind::Sdg, GateKind::T, GateKind::CX, GateKind::CZ,
        GateKind::Measure, GateKind::Reset}) {
    auto parsed = gate_from_name(name_of(g));
    ASSERT_TRUE(parsed.has_value());
    EXPECT_EQ(*parsed, g);
  }
  EXPECT_FALSE(gate_from_name("foo").has_value());
}
