#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coinv {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPrime : Error {
  explicit NonPrime(unsigned long long v)
      : Error("not a prime: " + std::to_string(v)) {}
};

struct CapExceeded : Error {
  using Error::Error;
};

struct FieldMismatch : Error {
  FieldMismatch() : Error("operands belong to different fields") {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct NotDividing : Error {
  NotDividing(unsigned m, unsigned qm1)
      : Error("no element of order " + std::to_string(m) + ": " +
              std::to_string(m) + " does not divide q-1 = " +
              std::to_string(qm1)) {}
};

struct ContextMismatch : Error {
  ContextMismatch() : Error("polynomials live in different variable contexts") {}
  explicit ContextMismatch(const std::string& what) : Error(what) {}
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct InvalidSpec : Error {
  using Error::Error;
};

struct BlockMismatch : Error {
  using Error::Error;
};

struct OutOfRange : Error {
  using Error::Error;
};

struct NonTermination : Error {
  using Error::Error;
};

// A violated internal assertion; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

// The generator degrees promised a regular sequence but the per-degree ranks
// disagree.
struct NotRegular : Error {
  long long degree;
  explicit NotRegular(long long d)
      : Error("not a regular sequence: rank defect at degree " +
              std::to_string(d)),
        degree(d) {}
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace coinv
