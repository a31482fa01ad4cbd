#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betavote/rational.hpp"

namespace betavote {

// Column position of a candidate in the roster (C_1 is index 0).
using CandidateIndex = std::size_t;

// Ordered roster of distinct candidate ids. Order is fixed for the lifetime of
// an election: column j of every matrix is candidate j.
class CandidateSet {
 public:
  explicit CandidateSet(std::vector<std::string> ids);

  // "C1", "C2", ... "Cc".
  static CandidateSet numbered(std::size_t count);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(CandidateIndex index) const { return ids_.at(index); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<CandidateIndex> find(std::string_view id) const;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::vector<std::string> ids_;
};

// One voter's plurality row and approval row. The first choice is always
// approved and the approval set is kept sorted and duplicate-free.
class BallotPair {
 public:
  BallotPair(CandidateIndex first_choice, std::vector<CandidateIndex> approvals);

  CandidateIndex first_choice() const noexcept { return first_; }
  const std::vector<CandidateIndex>& approvals() const noexcept { return approvals_; }
  bool approves(CandidateIndex candidate) const;

  friend bool operator==(const BallotPair&, const BallotPair&) = default;

 private:
  CandidateIndex first_;
  std::vector<CandidateIndex> approvals_;
};

// Dense n x c 0/1 matrix (a plurality or an approval matrix).
class VoteMatrix {
 public:
  VoteMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}
  VoteMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> cells);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint8_t at(std::size_t row, std::size_t col) const { return cells_.at(row * cols_ + col); }
  void set(std::size_t row, std::size_t col, std::uint8_t value) { cells_.at(row * cols_ + col) = value; }

  friend bool operator==(const VoteMatrix&, const VoteMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> cells_;
};

class Election {
 public:
  Election(CandidateSet candidates, std::vector<BallotPair> ballots);

  const CandidateSet& candidates() const noexcept { return candidates_; }
  const std::vector<BallotPair>& ballots() const noexcept { return ballots_; }
  std::size_t voter_count() const noexcept { return ballots_.size(); }
  std::size_t candidate_count() const noexcept { return candidates_.size(); }

  VoteMatrix plurality_matrix() const;
  VoteMatrix approval_matrix() const;

  friend bool operator==(const Election&, const Election&) = default;

 private:
  CandidateSet candidates_;
  std::vector<BallotPair> ballots_;
};

enum class BetaEntry : std::uint8_t { None, Approve, First };

// A beta(k) vote matrix. Entries are stored by role rather than by value so a
// row keeps its single first-choice cell even at k = 1, where k and 1 coincide.
// Any grid with exactly one First per row is accepted, whether or not it came
// from a consistent ballot.
class BetaMatrix {
 public:
  BetaMatrix(Rational k, std::size_t rows, std::size_t cols, std::vector<BetaEntry> entries);
  BetaMatrix(Rational k, const std::vector<std::vector<BetaEntry>>& rows);

  const Rational& k() const noexcept { return k_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BetaEntry entry(std::size_t row, std::size_t col) const { return entries_.at(row * cols_ + col); }
  Rational value(std::size_t row, std::size_t col) const;
  std::vector<std::vector<Rational>> values() const;

  friend bool operator==(const BetaMatrix&, const BetaMatrix&) = default;

 private:
  Rational k_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BetaEntry> entries_;
};

// One voter's complete ranking (best first) and approval cutoff: the voter
// approves the top `approval_cutoff` candidates of the ranking.
struct VoterPreference {
  std::vector<CandidateIndex> ranking;
  std::size_t approval_cutoff = 1;

  friend bool operator==(const VoterPreference&, const VoterPreference&) = default;
};

class PreferenceProfile {
 public:
  PreferenceProfile(CandidateSet candidates, std::vector<VoterPreference> voters);

  const CandidateSet& candidates() const noexcept { return candidates_; }
  const std::vector<VoterPreference>& voters() const noexcept { return voters_; }
  std::size_t voter_count() const noexcept { return voters_.size(); }
  std::size_t candidate_count() const noexcept { return candidates_.size(); }

  // Rank position of `candidate` for `voter` (0 = top).
  std::size_t position(std::size_t voter, CandidateIndex candidate) const {
    return positions_.at(voter * candidates_.size() + candidate);
  }
  bool prefers(std::size_t voter, CandidateIndex a, CandidateIndex b) const {
    return position(voter, a) < position(voter, b);
  }

  friend bool operator==(const PreferenceProfile& a, const PreferenceProfile& b) {
    return a.candidates_ == b.candidates_ && a.voters_ == b.voters_;
  }

 private:
  CandidateSet candidates_;
  std::vector<VoterPreference> voters_;
  std::vector<std::size_t> positions_;
};

// B = P * (k - 1) + A. Throws DomainError(WeightBelowOne) for k < 1.
BetaMatrix compose_beta(const Election& election, const Rational& k);

// First choice = top of the ranking; approvals = the top-t prefix.
Election honest_ballots(const PreferenceProfile& profile);

// True iff the k-cells of `beta` are exactly the 1-cells of `plurality`.
bool validate_regime_plurality(const BetaMatrix& beta, const VoteMatrix& plurality);

// True iff the nonzero cells of `beta` are exactly the 1-cells of `approval`.
bool validate_regime_approval(const BetaMatrix& beta, const VoteMatrix& approval);

}  // namespace betavote
