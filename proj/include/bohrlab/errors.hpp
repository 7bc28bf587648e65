#pragma once

#include <stdexcept>
#include <string>

namespace bohrlab {

enum class ErrorCode {
  InvalidArgument,
  RadiusRejected,
  NoRoot,
  SupportViolation,
  ConstraintViolated,
  NotSchwarz,
  WitnessNotFound,
  Uncertified,
  DimensionMismatch,
  Parse,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto a stable exit status.
class BohrError : public std::runtime_error {
 public:
  BohrError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bohrlab
