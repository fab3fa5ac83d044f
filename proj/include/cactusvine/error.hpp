#ifndef CACTUSVINE_ERROR_HPP
#define CACTUSVINE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cactusvine {

enum class ErrorCode {
  MalformedInput,
  Disconnected,
  NonPositiveWeight,
  InvalidCutSet,
  InvalidPartition,
  NotATree,
  SameTree,
  NotForestEdge,
  NotTreeRoot,
  DifferentTrees,
  PackingUnverifiable,
  PackingRetriesExhausted,
  InconsistentLabels,
  AlgorithmInvariantViolation,
  TooLarge,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::InvalidCutSet: return "InvalidCutSet";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::SameTree: return "SameTree";
    case ErrorCode::NotForestEdge: return "NotForestEdge";
    case ErrorCode::NotTreeRoot: return "NotTreeRoot";
    case ErrorCode::DifferentTrees: return "DifferentTrees";
    case ErrorCode::PackingUnverifiable: return "PackingUnverifiable";
    case ErrorCode::PackingRetriesExhausted: return "PackingRetriesExhausted";
    case ErrorCode::InconsistentLabels: return "InconsistentLabels";
    case ErrorCode::AlgorithmInvariantViolation: return "AlgorithmInvariantViolation";
    case ErrorCode::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cactusvine

#endif  // CACTUSVINE_ERROR_HPP
