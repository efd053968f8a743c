#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace igrass {

enum class ErrorCode {
  InvalidParameter,
  Precondition,
  ChamberDegenerate,
  UnknownStructure,
  NonIntegralClass,
  OracleTooLarge,
  NeedsPermutation,
  NotApplicable,
  NoContraction,
  NoCertificate,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::ChamberDegenerate: return "chamber-degenerate";
    case ErrorCode::UnknownStructure: return "unknown-structure";
    case ErrorCode::NonIntegralClass: return "non-integral-class";
    case ErrorCode::OracleTooLarge: return "oracle-too-large";
    case ErrorCode::NeedsPermutation: return "needs-permutation";
    case ErrorCode::NotApplicable: return "not-applicable";
    case ErrorCode::NoContraction: return "no-contraction";
    case ErrorCode::NoCertificate: return "no-certificate";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace igrass
