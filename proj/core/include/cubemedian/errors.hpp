#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace cubemedian {

enum class ErrorCode {
  EmptyHalfspace,
  NotAPartition,
  DuplicateWall,
  TooLarge,
  Disconnected,
  NotMedian,
  NotSubalgebra,
  NotAutomorphism,
  MismatchedComplex,
  NotCommuting,
  NotLoxodromic,
  NotFreeOnSample,
  InvalidDocument,
  Internal,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

// verify_median failure; carries the offending triple when one is known.
class NotMedianError : public Error {
public:
  NotMedianError(const std::string& what, std::array<int, 3> triple)
      : Error(ErrorCode::NotMedian, what), triple_(triple), has_triple_(true) {}
  explicit NotMedianError(const std::string& what)
      : Error(ErrorCode::NotMedian, what) {}
  bool has_witness() const { return has_triple_; }
  const std::array<int, 3>& witness() const { return triple_; }

private:
  std::array<int, 3> triple_{{-1, -1, -1}};
  bool has_triple_ = false;
};

}  // namespace cubemedian
