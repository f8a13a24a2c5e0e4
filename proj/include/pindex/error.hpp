#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pindex {

enum class ErrorCode {
  SyntaxError,
  ExponentError,
  UnknownName,
  FormatError,
  InvalidArgument,
  SingularOnCircuit,
  NonConvergent,
  DegenerateTangency,
  CircuitIsLeaf,
  ParityError,
  InsufficientConcavities,
  MonotonicityViolation,
  InvalidStep,
  PreconditionLoop,
  NotClosed,
  NotManifold,
  DegenerateFace,
  RangeError,
  OrientableInput,
  EvenInput,
  ChiMismatch,
  CapBoundViolation,
  LengthMismatch,
};

/// Stable identifier used in CLI diagnostics, e.g. "singular_on_circuit".
std::string_view error_code_name(ErrorCode code) noexcept;

/// True for errors caused by malformed user input rather than by a
/// computation on well-formed input.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure in a polynomial expression; carries the byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t position, const std::string& message)
      : Error(code, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pindex
