#include <gtest/gtest.h>

#include <random>

#include "qec/circuit_io.hpp"
#include "testutil.hpp"

using namespace qec;

TEST(Parse, MinimalProgram) {
  Circuit c = parse_circuit("qubits 2; clbits 1;\n"
                            "h q[0];\n"
                            "cx q[0],q[1];\n"
                            "measure q[1] -> c[0];\n");
  EXPECT_EQ(c.num_qubits, 2u);
  EXPECT_EQ(c.num_clbits, 1u);
  ASSERT_EQ(c.ops.size(), 3u);
  EXPECT_EQ(c.ops[0], Operation::gate(GateKind::H, 0));
  EXPECT_EQ(c.ops[1], Operation::gate(GateKind::CX, 0, 1));
  EXPECT_EQ(c.ops[2], Operation::measure(1, 0));
}

TEST(Parse, RegisterHeaderAlias) {
  Circuit a = parse_circuit("qreg q[3]; creg c[2]; x q[2];");
  Circuit b = parse_circuit("qubits 3; clbits 2; x q[2];");
  EXPECT_EQ(a, b);
}

TEST(Parse, CommentsAndWhitespaceAreInsignificant) {
  Circuit c = parse_circuit("// leading comment\n"
                            "qubits 1;   clbits 1; // trailing\n"
                            "  x   q[ 0 ] ;\n"
                            "\t\tmeasure q[0]->c[0];// no spaces needed\n");
  ASSERT_EQ(c.ops.size(), 2u);
  EXPECT_EQ(c.ops[1], Operation::measure(0, 0));
}

TEST(Parse, AllGateMnemonics) {
  Circuit c = parse_circuit("qubits 2; clbits 1;"
                            "id q[0]; h q[0]; x q[0]; y q[0]; z q[0];"
                            "s q[0]; sdg q[0]; t q[0];"
                            "cx q[0],q[1]; cz q[1],q[0];"
                            "reset q[1]; measure q[0] -> c[0];");
  ASSERT_EQ(c.ops.size(), 12u);
  EXPECT_EQ(c.ops[0].kind, GateKind::I);
  EXPECT_EQ(c.ops[6].kind, GateKind::Sdg);
  EXPECT_EQ(c.ops[9].kind, GateKind::CZ);
  EXPECT_EQ(c.ops[9].q0, 1u);
  EXPECT_EQ(c.ops[10].kind, GateKind::Reset);
}

TEST(Parse, WholeRegisterCondition) {
  Circuit c = parse_circuit("qubits 1; clbits 3; if (c==5) x q[0];");
  ASSERT_TRUE(c.ops[0].condition.has_value());
  const Condition& g = *c.ops[0].condition;
  EXPECT_EQ(g.first, 0u);
  EXPECT_EQ(g.last, 2u);
  EXPECT_EQ(g.value, 5u);
  EXPECT_TRUE(g.whole_register);
}

TEST(Parse, SingleBitCondition) {
  Circuit c = parse_circuit("qubits 1; clbits 3; if (c[2]==1) z q[0];");
  const Condition& g = *c.ops[0].condition;
  EXPECT_EQ(g.first, 2u);
  EXPECT_EQ(g.last, 2u);
  EXPECT_EQ(g.value, 1u);
  EXPECT_FALSE(g.whole_register);
}

TEST(Parse, RangeCondition) {
  Circuit c = parse_circuit("qubits 1; clbits 6; if (c[1:3]==6) y q[0];");
  const Condition& g = *c.ops[0].condition;
  EXPECT_EQ(g.first, 1u);
  EXPECT_EQ(g.last, 3u);
  EXPECT_EQ(g.value, 6u);
}

TEST(Parse, ErrorsCarrySourceLocation) {
  try {
    parse_circuit("qubits 1; clbits 1;\nfoo q[0];\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 1u);
    EXPECT_NE(std::string(e.what()).find("unknown gate 'foo'"),
              std::string::npos);
  }
}

TEST(Parse, RejectsMalformedPrograms) {
  EXPECT_THROW(parse_circuit(""), ParseError);
  EXPECT_THROW(parse_circuit("qubits 1;"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 1; clbits 1; x q[0]"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 1; clbits 1; x p[0];"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 1; clbits 1; cx q[0] q[1];"),
               ParseError);
  EXPECT_THROW(parse_circuit("qubits 2; clbits 1; measure q[0] c[0];"),
               ParseError);
  EXPECT_THROW(parse_circuit("qubits 1; clbits 1; if c[0]==1 x q[0];"),
               ParseError);
}

TEST(Parse, RejectsSemanticallyInvalidOperands) {
  EXPECT_THROW(parse_circuit("qubits 1; clbits 1; x q[1];"), ParseError);
  EXPECT_THROW(parse_circuit("qubits 2; clbits 1; cx q[0],q[0];"),
               ParseError);
  EXPECT_THROW(parse_circuit("qubits 1; clbits 1; measure q[0] -> c[9];"),
               ParseError);
  EXPECT_THROW(parse_circuit("qubits 1; clbits 2; if (c==9) x q[0];"),
               ParseError);
  EXPECT_THROW(parse_circuit("qubits 1; clbits 2; if (c[1:0]==0) x q[0];"),
               ParseError);
}

TEST(Serialize, MatchesTheDocumentedLayout) {
  Circuit c(2, 2);
  c.h(0).cx(0, 1).i(1);
  Operation guarded = Operation::gate(GateKind::X, 0);
  guarded.condition = Condition{1, 1, 1, false};
  c.add(guarded);
  c.measure(0, 0);
  EXPECT_EQ(serialize(c), "qubits 2; clbits 2;\n"
                          "h q[0];\n"
                          "cx q[0],q[1];\n"
                          "id q[1];\n"
                          "if (c[1]==1) x q[0];\n"
                          "measure q[0] -> c[0];\n");
}

TEST(Serialize, RendersAllConditionForms) {
  Circuit c(1, 4);
  Operation a = Operation::gate(GateKind::X, 0);
  a.condition = Condition{0, 3, 9, true};
  Operation b = Operation::gate(GateKind::Y, 0);
  b.condition = Condition{2, 2, 1, false};
  Operation d = Operation::gate(GateKind::Z, 0);
  d.condition = Condition{1, 3, 5, false};
  c.add(a).add(b).add(d);
  EXPECT_EQ(serialize(c), "qubits 1; clbits 4;\n"
                          "if (c==9) x q[0];\n"
                          "if (c[2]==1) y q[0];\n"
                          "if (c[1:3]==5) z q[0];\n");
}

TEST(RoundTrip, RandomCircuitsSurviveSerializeParse) {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 200; ++trial) {
    Circuit original =
        qec::testing::random_circuit(rng, 6, 6, 1 + (trial % 40));
    Circuit reparsed = parse_circuit(serialize(original));
    EXPECT_EQ(original, reparsed) << "trial " << trial << "\n"
                                  << serialize(original);
  }
}

TEST(RoundTrip, SerializationIsDeterministic) {
  std::mt19937_64 rng(7);
  Circuit c = qec::testing::random_circuit(rng, 5, 5, 30);
  EXPECT_EQ(serialize(c), serialize(parse_circuit(serialize(c))));
}

TEST(Files, SaveAndLoadRoundTrip) {
  Circuit c = ghz_benchmark(3);
  std::string path = ::testing::TempDir() + "ghz3.qc";
  save_circuit(c, path);
  EXPECT_EQ(load_circuit(path), c);
  EXPECT_THROW(load_circuit(path + ".missing"), Error);
}
