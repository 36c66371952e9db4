#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gerst {

enum class ErrorCode {
  InfiniteQuotient,
  NotNested,
  NotDownwardClosed,
  NotSkew,
  NonTransitiveJoinability,
  EmptyShape,
  NotAntitone,
  DimensionMismatch,
  TooLarge,
  InvalidGluing,
  NonCommuting,
  SizeMismatch,
  Overflow,
  InconsistencyDetected,
  InvalidTower,
  InvalidFloorPlan,
  NotScaffolded,
  PreconditionFailed,
  NoOverlap,
  ObligationFailed,
  ParseError,
  GenerationFailed,
  AnomalyFound,
  UnsupportedKind,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gerst
