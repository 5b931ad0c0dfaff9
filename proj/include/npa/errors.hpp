#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace npa {

/// Base for all errors raised on bad automata, files or words.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A violated automaton invariant (missing transition, non-stochastic
/// generator, output outside [0,1], ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& symbol)
      : Error("unknown symbol '" + symbol + "'"), symbol_(symbol) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by the exhaustive oracle when enumeration would exceed its cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace npa
