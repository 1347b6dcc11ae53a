#pragma once

#include <stdexcept>
#include <string>

namespace morsegrass {

/// Stable machine-readable error categories. The CLI maps these to exit codes.
enum class ErrorCode {
  usage,
  domain,
  parse,
  validation,
  capacity,
  consistency,
  degenerate_input,
  ambiguous_cell,
  divergence,
  io,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::usage: return "usage";
    case ErrorCode::domain: return "domain";
    case ErrorCode::parse: return "parse";
    case ErrorCode::validation: return "validation";
    case ErrorCode::capacity: return "capacity";
    case ErrorCode::consistency: return "consistency";
    case ErrorCode::degenerate_input: return "degenerate_input";
    case ErrorCode::ambiguous_cell: return "ambiguous_cell";
    case ErrorCode::divergence: return "divergence";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Arguments outside an operation's domain (bad k/n, mismatched ambient, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorCode::validation, what) {}
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorCode::capacity, what) {}
};

class ConsistencyError : public Error {
 public:
  explicit ConsistencyError(const std::string& what) : Error(ErrorCode::consistency, what) {}
};

/// Frame does not have full column rank.
class DegenerateInputError : public Error {
 public:
  explicit DegenerateInputError(const std::string& what)
      : Error(ErrorCode::degenerate_input, what) {}
};

/// A point sits numerically on the boundary between two cells.
class AmbiguousCellError : public Error {
 public:
  AmbiguousCellError(const std::string& what, double magnitude)
      : Error(ErrorCode::ambiguous_cell, what), magnitude_(magnitude) {}
  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

class DivergenceError : public Error {
 public:
  explicit DivergenceError(const std::string& what) : Error(ErrorCode::divergence, what) {}
};

}  // namespace morsegrass
