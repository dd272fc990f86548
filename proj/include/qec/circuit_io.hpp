// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.
//
// Plain-text circuit format.
//
//   qubits 3; clbits 3;          (alias: qreg q[3]; creg c[3];)
//   h q[0];
//   cx q[0],q[1];
//   if (c[0]==1) x q[2];         guards: c==v | c[i]==v | c[lo:hi]==v
//   measure q[0] -> c[0];
//
// One instruction per statement, statements end with ';', '//' starts a
// comment that runs to the end of the line, whitespace is insignificant.
// In a ranged guard c[lo:hi]==v (bounds inclusive) bit k of v is compared
// against clbit lo+k, so the lowest listed clbit is the least significant.

#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "qec/circuit.hpp"
#include "qec/errors.hpp"

namespace qec {

namespace detail {

class Scanner {
public:
  explicit Scanner(std::string_view src) : src_(src) {}

  struct Loc {
    std::size_t line;
    std::size_t column;
  };

  Loc loc() const { return {line_, col_}; }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char ch = src_[pos_];
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        advance();
      } else if (ch == '/' && pos_ + 1 < src_.size() &&
                 src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_trivia();
    return pos_ >= src_.size();
  }

  bool try_literal(std::string_view lit) {
    skip_trivia();
    if (src_.substr(pos_).substr(0, lit.size()) != lit) return false;
    for (std::size_t i = 0; i < lit.size(); ++i) advance();
    return true;
  }

  void expect_literal(std::string_view lit, std::string_view what) {
    if (!try_literal(lit))
      fail(std::string("expected ") + std::string(what));
  }

  /// Next identifier ([a-zA-Z_][a-zA-Z0-9_]*), or "" when none is present.
  std::string ident() {
    skip_trivia();
    std::size_t start = pos_;
    auto head = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto tail = [&head](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (pos_ < src_.size() && head(src_[pos_])) {
      advance();
      while (pos_ < src_.size() && tail(src_[pos_])) advance();
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  std::uint64_t integer(std::string_view what) {
    skip_trivia();
    std::size_t start = pos_;
    while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9')
      advance();
    if (pos_ == start) fail(std::string("expected ") + std::string(what));
    std::uint64_t value = 0;
    auto text = src_.substr(start, pos_ - start);
    auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{})
      fail(std::string(what) + " does not fit in 64 bits");
    return value;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, col_, message);
  }

  [[noreturn]] void fail_at(Loc at, const std::string& message) const {
    throw ParseError(at.line, at.column, message);
  }

private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

} // namespace detail

/// Parses circuit text. Throws ParseError with a 1-based source location on
/// malformed input.
inline Circuit parse_circuit(std::string_view text, std::string name = "") {
  detail::Scanner sc(text);

  auto parse_index = [&sc](char reg) -> std::uint64_t {
    sc.expect_literal(std::string_view(&reg, 1), std::string("register '") +
                                                     reg + "'");
    sc.expect_literal("[", "'['");
    std::uint64_t idx = sc.integer("an index");
    sc.expect_literal("]", "']'");
    return idx;
  };

  // Header.
  auto head_loc = sc.loc();
  std::string head = sc.ident();
  std::uint64_t nq = 0, nc = 0;
  if (head == "qubits") {
    nq = sc.integer("the qubit count");
    sc.expect_literal(";", "';'");
    auto loc2 = sc.loc();
    if (sc.ident() != "clbits") sc.fail_at(loc2, "expected 'clbits'");
    nc = sc.integer("the clbit count");
    sc.expect_literal(";", "';'");
  } else if (head == "qreg") {
    nq = parse_index('q');
    sc.expect_literal(";", "';'");
    auto loc2 = sc.loc();
    if (sc.ident() != "creg") sc.fail_at(loc2, "expected 'creg'");
    nc = parse_index('c');
    sc.expect_literal(";", "';'");
  } else {
    sc.fail_at(head_loc, "expected a 'qubits'/'clbits' or 'qreg'/'creg' "
                         "header");
  }
  if (nq > (1u << 28) || nc > (1u << 28))
    sc.fail_at(head_loc, "register size is unreasonably large");

  Circuit circuit(static_cast<std::uint32_t>(nq),
                  static_cast<std::uint32_t>(nc), std::move(name));

  while (!sc.at_end()) {
    auto stmt_loc = sc.loc();
    std::string word = sc.ident();
    if (word.empty()) sc.fail("expected an instruction");

    std::optional<Condition> guard;
    if (word == "if") {
      sc.expect_literal("(", "'('");
      auto cref_loc = sc.loc();
      if (sc.ident() != "c") sc.fail_at(cref_loc, "expected register 'c'");
      Condition cond;
      if (sc.try_literal("[")) {
        std::uint64_t lo = sc.integer("a clbit index");
        std::uint64_t hi = lo;
        if (sc.try_literal(":")) hi = sc.integer("a clbit index");
        sc.expect_literal("]", "']'");
        cond.first = static_cast<std::uint32_t>(lo);
        cond.last = static_cast<std::uint32_t>(hi);
      } else {
        if (circuit.num_clbits == 0)
          sc.fail_at(cref_loc, "cannot test an empty classical register");
        cond.first = 0;
        cond.last = circuit.num_clbits - 1;
        cond.whole_register = true;
      }
      sc.expect_literal("==", "'=='");
      cond.value = sc.integer("a comparison value");
      sc.expect_literal(")", "')'");
      guard = cond;
      auto verb_loc = sc.loc();
      word = sc.ident();
      if (word.empty()) sc.fail_at(verb_loc, "expected an instruction");
      stmt_loc = verb_loc;
    }

    auto kind = gate_from_name(word);
    if (!kind) sc.fail_at(stmt_loc, "unknown gate '" + word + "'");

    Operation op;
    op.kind = *kind;
    op.q0 = static_cast<std::uint32_t>(parse_index('q'));
    if (arity_of(*kind) == 2) {
      sc.expect_literal(",", "','");
      op.q1 = static_cast<std::uint32_t>(parse_index('q'));
    } else if (*kind == GateKind::Measure) {
      sc.expect_literal("->", "'->'");
      op.clbit = static_cast<std::uint32_t>(parse_index('c'));
    }
    op.condition = guard;
    sc.expect_literal(";", "';'");

    try {
      circuit.add(std::move(op));
    } catch (const std::exception& ex) {
      sc.fail_at(stmt_loc, ex.what());
    }
  }
  return circuit;
}

/// Renders a circuit in the format accepted by parse_circuit. The output is
/// canonical: parse_circuit(serialize(c)) reproduces c exactly (the name and
/// noise-exemption metadata are not part of the format).
inline std::string serialize(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.num_qubits << "; clbits " << circuit.num_clbits
      << ";\n";
  for (const Operation& op : circuit.ops) {
    if (op.condition) {
      const Condition& g = *op.condition;
      out << "if (c";
      if (!(g.whole_register && g.first == 0 &&
            g.last + 1 == circuit.num_clbits)) {
        out << '[' << g.first;
        if (g.last != g.first) out << ':' << g.last;
        out << ']';
      }
      out << "==" << g.value << ") ";
    }
    out << name_of(op.kind) << " q[" << op.q0 << ']';
    if (arity_of(op.kind) == 2)
      out << ",q[" << op.q1 << ']';
    else if (op.kind == GateKind::Measure)
      out << " -> c[" << op.clbit << ']';
    out << ";\n";
  }
  return out.str();
}

/// Reads and parses a circuit file. I/O problems raise qec::Error; syntax
/// problems raise ParseError.
inline Circuit load_circuit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("failed while reading '" + path + "'");
  return parse_circuit(buf.str(), path);
}

inline void save_circuit(const Circuit& circuit, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << serialize(circuit);
  if (!out) throw Error("failed while writing '" + path + "'");
}

} // namespace qec
