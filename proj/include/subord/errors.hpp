#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subord {

enum class ErrorCode {
  ZeroLeadingCoefficient,
  PoleAtOrigin,
  DegenerateConstant,
  SignViolation,
  RejectionBudgetExhausted,
  DomainError,
  Degenerate,
  CenterMismatch,
  PoleHit,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures in the library are reported through this type.
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
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorCode::DegenerateConstant: return "DegenerateConstant";
    case ErrorCode::SignViolation: return "SignViolation";
    case ErrorCode::RejectionBudgetExhausted: return "RejectionBudgetExhausted";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::PoleHit: return "PoleHit";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace subord
