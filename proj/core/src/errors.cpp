#include "cubemedian/errors.hpp"

namespace cubemedian {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptyHalfspace: return "EmptyHalfspace";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::DuplicateWall: return "DuplicateWall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotMedian: return "NotMedian";
    case ErrorCode::NotSubalgebra: return "NotSubalgebra";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::MismatchedComplex: return "MismatchedComplex";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotLoxodromic: return "NotLoxodromic";
    case ErrorCode::NotFreeOnSample: return "NotFreeOnSample";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace cubemedian
