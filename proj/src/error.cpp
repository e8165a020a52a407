#include "gravent/error.hpp"

namespace gravent {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroDistance: return "ZeroDistance";
    case ErrorCode::ThresholdViolation: return "ThresholdViolation";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::InvalidBipartition: return "InvalidBipartition";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::FullSubset: return "FullSubset";
    case ErrorCode::NotTwoQubit: return "NotTwoQubit";
    case ErrorCode::NegativeResidual: return "NegativeResidual";
    case ErrorCode::AllZeroPhases: return "AllZeroPhases";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace gravent
