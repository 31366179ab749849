#pragma once

#include <stdexcept>
#include <string>

namespace nclab {

// Exceptions are used for contract violations only; numerical verdicts
// (pass/fail/flagged) are data, never exceptions.

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct PositivityError : Error {
  using Error::Error;
};

struct DegenerateInputError : Error {
  using Error::Error;
};

struct UnsupportedParameterError : Error {
  using Error::Error;
};

struct SymmetryError : Error {
  using Error::Error;
};

struct EvaluationError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

struct AccuracyError : Error {
  using Error::Error;
};

struct DivergenceError : Error {
  using Error::Error;
};

struct SpecificationError : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

struct ContractViolationError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  // line/col anchor into the offending config text, when known
  int line = 0;
  int column = 0;
  ConfigError(const std::string& msg, int line_, int column_)
      : Error(msg), line(line_), column(column_) {}
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace nclab
