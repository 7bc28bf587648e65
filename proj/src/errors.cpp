#include "bohrlab/errors.hpp"

namespace bohrlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::RadiusRejected: return "RADIUS_REJECTED";
    case ErrorCode::NoRoot: return "NO_ROOT";
    case ErrorCode::SupportViolation: return "SUPPORT_VIOLATION";
    case ErrorCode::ConstraintViolated: return "CONSTRAINT_VIOLATED";
    case ErrorCode::NotSchwarz: return "NOT_SCHWARZ";
    case ErrorCode::WitnessNotFound: return "WITNESS_NOT_FOUND";
    case ErrorCode::Uncertified: return "UNCERTIFIED";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::Parse: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace bohrlab
