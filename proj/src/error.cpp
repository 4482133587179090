#include "kconn/error.hpp"

namespace kconn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "self-loop";
    case ErrorCode::kDuplicateEdge: return "duplicate-edge";
    case ErrorCode::kOutOfRange: return "out-of-range";
    case ErrorCode::kMissingEdge: return "missing-edge";
    case ErrorCode::kAlreadyInitialized: return "already-initialized";
    case ErrorCode::kUninitialized: return "uninitialized";
    case ErrorCode::kNotRoot: return "not-root";
    case ErrorCode::kSameTree: return "same-tree";
    case ErrorCode::kCutRoot: return "cut-root";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInsufficientConnectivity: return "insufficient-connectivity";
    case ErrorCode::kNoAugmentingPair: return "no-augmenting-pair";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kInvalidCommand: return "invalid-command";
  }
  return "unknown";
}

}  // namespace kconn
