#include "pindex/error.hpp"
#include "pindex/half_index.hpp"

#include <charconv>

namespace pindex {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError: return "syntax_error";
    case ErrorCode::ExponentError: return "exponent_error";
    case ErrorCode::UnknownName: return "unknown_name";
    case ErrorCode::FormatError: return "format_error";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::SingularOnCircuit: return "singular_on_circuit";
    case ErrorCode::NonConvergent: return "non_convergent";
    case ErrorCode::DegenerateTangency: return "degenerate_tangency";
    case ErrorCode::CircuitIsLeaf: return "circuit_is_leaf";
    case ErrorCode::ParityError: return "parity_error";
    case ErrorCode::InsufficientConcavities: return "insufficient_concavities";
    case ErrorCode::MonotonicityViolation: return "monotonicity_violation";
    case ErrorCode::InvalidStep: return "invalid_step";
    case ErrorCode::PreconditionLoop: return "precondition_loop";
    case ErrorCode::NotClosed: return "not_closed";
    case ErrorCode::NotManifold: return "not_manifold";
    case ErrorCode::DegenerateFace: return "degenerate_face";
    case ErrorCode::RangeError: return "range_error";
    case ErrorCode::OrientableInput: return "orientable_input";
    case ErrorCode::EvenInput: return "even_input";
    case ErrorCode::ChiMismatch: return "chi_mismatch";
    case ErrorCode::CapBoundViolation: return "cap_bound_violation";
    case ErrorCode::LengthMismatch: return "length_mismatch";
  }
  return "unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::ExponentError:
    case ErrorCode::UnknownName:
    case ErrorCode::FormatError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::RangeError:
      return true;
    default:
      return false;
  }
}

namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

HalfIndex HalfIndex::parse(std::string_view text) {
  std::int64_t n = 0;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (text.substr(slash + 1) != "2" || !parse_int(text.substr(0, slash), n))
      throw Error(ErrorCode::FormatError, "expected half-integer 'p/2', got '" + std::string(text) + "'");
    return from_doubled(n);
  }
  if (!parse_int(text, n))
    throw Error(ErrorCode::FormatError, "expected half-integer 'p/2' or integer, got '" + std::string(text) + "'");
  return from_int(n);
}

}  // namespace pindex
