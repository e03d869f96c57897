#include "evoloop/errors.hpp"

namespace evoloop {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::InvalidPayload: return "InvalidPayload";
    case Errc::NotFound: return "NotFound";
    case Errc::VersionOutOfRange: return "VersionOutOfRange";
    case Errc::StaleBase: return "StaleBase";
    case Errc::ArtifactPruned: return "ArtifactPruned";
    case Errc::AlreadyPruned: return "AlreadyPruned";
    case Errc::UnknownSnapshot: return "UnknownSnapshot";
    case Errc::StorageFailure: return "StorageFailure";
    case Errc::NonMonotonicEpisode: return "NonMonotonicEpisode";
    case Errc::EndOutOfRange: return "EndOutOfRange";
    case Errc::EmptyWindow: return "EmptyWindow";
    case Errc::EmptyPatternSet: return "EmptyPatternSet";
    case Errc::ZeroTotal: return "ZeroTotal";
    case Errc::PassedExceedsTotal: return "PassedExceedsTotal";
    case Errc::BackendUnavailable: return "BackendUnavailable";
    case Errc::MalformedAction: return "MalformedAction";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::MalformedBackendReply: return "MalformedBackendReply";
    case Errc::InvalidPlan: return "InvalidPlan";
    case Errc::StaleCandidate: return "StaleCandidate";
    case Errc::ChainMismatch: return "ChainMismatch";
    case Errc::UnresolvedTicket: return "UnresolvedTicket";
    case Errc::AlreadyResolved: return "AlreadyResolved";
    case Errc::SandboxUnavailable: return "SandboxUnavailable";
    case Errc::SignatureViolation: return "SignatureViolation";
    case Errc::UnresolvableTarget: return "UnresolvableTarget";
    case Errc::InvalidSchedule: return "InvalidSchedule";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::EmptyScores: return "EmptyScores";
    case Errc::ScoreOutOfRange: return "ScoreOutOfRange";
    case Errc::WorkspaceLocked: return "WorkspaceLocked";
    case Errc::ConfigError: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace evoloop
