#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cantor {

// Shared failure taxonomy. The CLI maps ParseError to exit code 2 and every
// other Error to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct MissingTable : Error {
  explicit MissingTable(std::size_t n)
      : Error("no output table for position " + std::to_string(n)), index(n) {}
  std::size_t index;
};

struct UseTooLarge : Error {
  using Error::Error;
};

struct BudgetExhausted : Error {
  using Error::Error;
};

struct InconsistentInstance : Error {
  using Error::Error;
};

struct OutOfWindow : Error {
  using Error::Error;
};

struct RangeExceeded : Error {
  using Error::Error;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

struct MissingDatabase : Error {
  using Error::Error;
};

}  // namespace cantor
