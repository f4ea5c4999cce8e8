#ifndef HYPERIVT_ERROR_HPP
#define HYPERIVT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperivt {

enum class ErrorCode {
  ParseError,
  DivisionByZero,
  EventuallyZeroDivisor,
  UltrafilterDependent,
  NotLimited,
  NotRationalFunction,
  DegenerateInterval,
  NoSignChange,
  NegativeRadicand,
  UndefinedInstantiation,
};

/// Stable snake_case name used in JSON output.
constexpr std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::DivisionByZero: return "division_by_zero";
    case ErrorCode::EventuallyZeroDivisor: return "eventually_zero_divisor";
    case ErrorCode::UltrafilterDependent: return "ultrafilter_dependent";
    case ErrorCode::NotLimited: return "not_limited";
    case ErrorCode::NotRationalFunction: return "not_rational_function";
    case ErrorCode::DegenerateInterval: return "degenerate_interval";
    case ErrorCode::NoSignChange: return "no_sign_change";
    case ErrorCode::NegativeRadicand: return "negative_radicand";
    case ErrorCode::UndefinedInstantiation: return "undefined_instantiation";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperivt

#endif  // HYPERIVT_ERROR_HPP
