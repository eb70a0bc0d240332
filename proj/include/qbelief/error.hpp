#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qbelief {

enum class ErrorCode {
  // domain file
  parse,
  bands_gap,
  bands_overlap,
  bands_order,
  arity,
  unknown_quality,
  count_negative,
  dup_key,
  missing_key,
  // engine
  not_possible,
  limits,
  invalid_argument,
};

/// Machine-readable name, e.g. "E_BANDS_GAP".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  [[nodiscard]] ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// A domain-file diagnostic. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, int line, const std::string& message)
      : Error(code, message), line_(line) {}

  [[nodiscard]] int line() const { return line_; }

 private:
  int line_;
};

/// Raised when a move is replayed from a column believed to be empty.
class NotPossibleError : public Error {
 public:
  NotPossibleError(std::size_t step, const std::string& message)
      : Error(ErrorCode::not_possible, message), step_(step) {}

  [[nodiscard]] std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

}  // namespace qbelief
