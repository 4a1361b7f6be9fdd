#pragma once

#include <stdexcept>
#include <string>

namespace clawdec {

enum class Errc {
  LoopRejected,
  VertexOutOfRange,
  MalformedGraph6,
  MalformedFile,
  NotSimple,
  UniverseExceeded,
  ParityMismatch,
  BudgetExceeded,
  PreconditionViolated,
  SizeNotDivisible,
  MaxDegreeTooLarge,
  NotFourRegular,
  Disconnected,
  NotTwoConnected,
  UniverseTooLarge,
  BlockInvariantViolated,
  KTooSmall,
  InvalidRotation,
  TranscriptionMissing,
  ClaimFailed,
  ParityImpossible,
  NotDivisibleByThree,
  RefusedScale,
  InvalidArgument,
};

const char* errc_name(Errc code);

// Every failure in the library surfaces as this exception. `index` carries the
// offending vertex, byte position or parameter when the error names one, else -1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, long index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        index_(index) {}

  Errc code() const noexcept { return code_; }
  long index() const noexcept { return index_; }

 private:
  Errc code_;
  long index_;
};

}  // namespace clawdec
