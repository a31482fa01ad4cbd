#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace betavote {

enum class ParseErrorKind {
  EmptyInput,
  Malformed,
  UnknownCandidate,
  DuplicateCandidate,
  FirstChoiceCount,
  InconsistentBallot,
};

const char* to_string(ParseErrorKind kind);

// Rejected input file. `line` is 1-based for CSV and the ballot/voter
// position (1-based) for JSON; 0 when the error is not tied to a row.
class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

enum class DomainErrorKind {
  WeightBelowOne,
  InsufficientVoters,
  InsufficientCandidates,
  InvalidProfile,
  InvalidConfig,
  DimensionMismatch,
  MissingSeed,
  InvalidRoster,
  InconsistentBallot,
  UnknownCandidate,
};

const char* to_string(DomainErrorKind kind);

// Well-formed request outside the domain of an operation (k < 1, n < 3 for
// the dictatorship probe, mismatched matrix shapes, ...).
class DomainError : public std::invalid_argument {
 public:
  DomainError(DomainErrorKind kind, const std::string& detail);

  DomainErrorKind kind() const noexcept { return kind_; }

 private:
  DomainErrorKind kind_;
};

}  // namespace betavote
