#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kconn {

enum class ErrorCode {
  kSelfLoop,
  kDuplicateEdge,
  kOutOfRange,
  kMissingEdge,
  kAlreadyInitialized,
  kUninitialized,
  kNotRoot,
  kSameTree,
  kCutRoot,
  kInvalidArgument,
  kInsufficientConnectivity,
  kNoAugmentingPair,
  kTooLarge,
  kInfeasible,
  kParse,
  kInvalidCommand,
};

std::string_view to_string(ErrorCode code);

// Every rejection raised by the library carries a code so callers can
// distinguish, e.g., a duplicate edge from a self-loop without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kconn
