#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mukai {

enum class ErrorCode {
  Parse,
  InvalidInput,
  NonIntegral,
  Zero,
  ZeroCharge,
  NonPositiveSquare,
  NoAdmissibleRegion,
  BoundOverflow,
  NotK3,
  NotIntegral,
  NotPrimitive,
  ZeroDenominator,
  ZeroRank,
  ZeroDegree,
  OutOfDomain,
  Degenerate,
  NonPositive,
  NotAligned,
  UniquenessViolation,
  Unsupported,
};

std::string_view error_code_name(ErrorCode code);

/// Every library failure is reported through this one exception type; the
/// code is what the CLI maps onto exit statuses and JSON error objects.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace mukai
