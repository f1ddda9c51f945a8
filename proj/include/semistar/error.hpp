#ifndef SEMISTAR_ERROR_HPP
#define SEMISTAR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace semistar {

enum class ErrorCode {
  AllZeroGenerators,
  BackendMismatch,
  NotCoprime,
  UnsupportedRank,
  WindowTooSmall,
  PrecisionExceeded,
  NotInvertible,
  UnknownOverring,
  EnumerationBudgetExceeded,
  InfiniteSpectrum,
  NotIntegral,
  ZeroPolynomial,
  TrivialStar,
  EmptyFamily,
  SearchFailed,
  Undecided,
  ConfigError,
  ParseError,
  UnknownName,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type; the code is
// stable and is what the tests and the CLI match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semistar

#endif
