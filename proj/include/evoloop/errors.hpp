#pragma once

#include <stdexcept>
#include <string>

namespace evoloop {

enum class Errc {
  // registry
  DuplicateId,
  InvalidPayload,
  NotFound,
  VersionOutOfRange,
  StaleBase,
  ArtifactPruned,
  AlreadyPruned,
  UnknownSnapshot,
  StorageFailure,
  // evidence
  NonMonotonicEpisode,
  EndOutOfRange,
  EmptyWindow,
  EmptyPatternSet,
  ZeroTotal,
  PassedExceedsTotal,
  // solve
  BackendUnavailable,
  MalformedAction,
  // evolver
  BudgetExhausted,
  MalformedBackendReply,
  InvalidPlan,
  // governance
  StaleCandidate,
  ChainMismatch,
  UnresolvedTicket,
  AlreadyResolved,
  // sandbox
  SandboxUnavailable,
  SignatureViolation,
  UnresolvableTarget,
  // harness
  InvalidSchedule,
  EmptyInput,
  EmptyScores,
  ScoreOutOfRange,
  // cli
  WorkspaceLocked,
  ConfigError,
};

const char* errc_name(Errc c);

// Single exception type carrying the spec's named error codes. Callers that
// care about the specific failure match on code(); everything else treats it
// as a runtime_error.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace evoloop
