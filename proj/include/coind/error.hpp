#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coind {

enum class ErrorCode {
  EmptyOperand,
  Malformed,
  CarrierTooLarge,
  NotMonotone,
  UnknownSeed,
  UnknownAtom,
  UnknownSymbol,
  UnknownFunction,
  UnknownMachine,
  StateSpaceExceeded,
  RootMissing,
  UnresolvableKey,
  NotAList,
  NotWellFounded,
  IllFoundedCall,
  SizeExceeded,
  InvalidDefinition,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this one exception type; callers
// that need to branch on the failure inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coind
