#include "betavote/errors.hpp"

namespace betavote {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::EmptyInput: return "EmptyInput";
    case ParseErrorKind::Malformed: return "Malformed";
    case ParseErrorKind::UnknownCandidate: return "UnknownCandidate";
    case ParseErrorKind::DuplicateCandidate: return "DuplicateCandidate";
    case ParseErrorKind::FirstChoiceCount: return "FirstChoiceCount";
    case ParseErrorKind::InconsistentBallot: return "InconsistentBallot";
  }
  return "Unknown";
}

const char* to_string(DomainErrorKind kind) {
  switch (kind) {
    case DomainErrorKind::WeightBelowOne: return "WeightBelowOne";
    case DomainErrorKind::InsufficientVoters: return "InsufficientVoters";
    case DomainErrorKind::InsufficientCandidates: return "InsufficientCandidates";
    case DomainErrorKind::InvalidProfile: return "InvalidProfile";
    case DomainErrorKind::InvalidConfig: return "InvalidConfig";
    case DomainErrorKind::DimensionMismatch: return "DimensionMismatch";
    case DomainErrorKind::MissingSeed: return "MissingSeed";
    case DomainErrorKind::InvalidRoster: return "InvalidRoster";
    case DomainErrorKind::InconsistentBallot: return "InconsistentBallot";
    case DomainErrorKind::UnknownCandidate: return "UnknownCandidate";
  }
  return "Unknown";
}

namespace {

std::string parse_message(ParseErrorKind kind, std::size_t line, const std::string& detail) {
  std::string msg = to_string(kind);
  if (line > 0) msg += " at line " + std::to_string(line);
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error(parse_message(kind, line, detail)), kind_(kind), line_(line) {}

DomainError::DomainError(DomainErrorKind kind, const std::string& detail)
    : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

}  // namespace betavote
