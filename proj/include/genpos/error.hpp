#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genpos {

enum class ErrorCode {
  DisconnectedGraph,
  UnreachablePair,
  InvalidVertex,
  WrongDiameter,
  NotACover,
  NotIsometric,
  ArityMismatch,
  DisconnectedGadget,
  InvalidCoordinate,
  InvalidParameter,
  InvalidSpec,
  TooLarge,
  MalformedHeader,
  TrailingBits,
  BadToken,
  VertexOutOfRange,
  SelfLoop,
  UnknownClaimId,
  BudgetExceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (tests, CLI) can dispatch on the kind rather than the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace genpos
