// Copyright 2026 The qec toolkit developers
//
// This code is licensed under the Apache License, Version 2.0. You may obtain
// a copy of this license in the LICENSE file in the root directory.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qec {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when circuit text cannot be parsed. Carries a 1-based source
/// location so callers can point at the offending token.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised when an operation is not representable by the selected code or
/// backend (e.g. a non-Clifford gate handed to the tableau simulator).
class UnsupportedGateError : public Error {
public:
  explicit UnsupportedGateError(const std::string& what) : Error(what) {}
};

/// Raised when a circuit exceeds the configured qubit budget of a backend.
class CapacityError : public Error {
public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

} // namespace qec
