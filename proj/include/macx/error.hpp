#ifndef MACX_ERROR_HPP
#define MACX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace macx {

enum class ErrorCode {
  VertexOutOfRange,
  GhostVertex,
  MTooLarge,
  MTooLargeForEnumeration,
  CellBudgetExceeded,
  CompositionNonzero,
  InvalidParameter,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-readable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::GhostVertex: return "GhostVertex";
    case ErrorCode::MTooLarge: return "MTooLarge";
    case ErrorCode::MTooLargeForEnumeration: return "MTooLargeForEnumeration";
    case ErrorCode::CellBudgetExceeded: return "CellBudgetExceeded";
    case ErrorCode::CompositionNonzero: return "CompositionNonzero";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace macx

#endif  // MACX_ERROR_HPP
