#include "betavote/ballots.hpp"

#include <algorithm>
#include <unordered_set>

#include "betavote/errors.hpp"

namespace betavote {

CandidateSet::CandidateSet(std::vector<std::string> ids) : ids_(std::move(ids)) {
  if (ids_.empty()) throw DomainError(DomainErrorKind::InvalidRoster, "at least one candidate is required");
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids_) {
    if (id.empty()) throw DomainError(DomainErrorKind::InvalidRoster, "empty candidate id");
    if (!seen.insert(id).second) {
      throw DomainError(DomainErrorKind::InvalidRoster, "duplicate candidate id '" + id + "'");
    }
  }
}

CandidateSet CandidateSet::numbered(std::size_t count) {
  std::vector<std::string> ids;
  ids.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) ids.push_back("C" + std::to_string(j));
  return CandidateSet(std::move(ids));
}

std::optional<CandidateIndex> CandidateSet::find(std::string_view id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<CandidateIndex>(it - ids_.begin());
}

BallotPair::BallotPair(CandidateIndex first_choice, std::vector<CandidateIndex> approvals)
    : first_(first_choice), approvals_(std::move(approvals)) {
  std::sort(approvals_.begin(), approvals_.end());
  approvals_.erase(std::unique(approvals_.begin(), approvals_.end()), approvals_.end());
  if (!std::binary_search(approvals_.begin(), approvals_.end(), first_)) {
    throw DomainError(DomainErrorKind::InconsistentBallot, "first choice is not approved");
  }
}

bool BallotPair::approves(CandidateIndex candidate) const {
  return std::binary_search(approvals_.begin(), approvals_.end(), candidate);
}

VoteMatrix::VoteMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (cells_.size() != rows_ * cols_) {
    throw DomainError(DomainErrorKind::DimensionMismatch, "cell count does not match rows x cols");
  }
}

Election::Election(CandidateSet candidates, std::vector<BallotPair> ballots)
    : candidates_(std::move(candidates)), ballots_(std::move(ballots)) {
  if (ballots_.empty()) throw DomainError(DomainErrorKind::InsufficientVoters, "an election needs at least one ballot");
  const auto c = candidates_.size();
  for (const auto& ballot : ballots_) {
    // approvals are sorted, so the last one bounds them all
    if (ballot.approvals().back() >= c) {
      throw DomainError(DomainErrorKind::UnknownCandidate, "ballot references a candidate outside the roster");
    }
  }
}

VoteMatrix Election::plurality_matrix() const {
  VoteMatrix m(voter_count(), candidate_count());
  for (std::size_t i = 0; i < ballots_.size(); ++i) m.set(i, ballots_[i].first_choice(), 1);
  return m;
}

VoteMatrix Election::approval_matrix() const {
  VoteMatrix m(voter_count(), candidate_count());
  for (std::size_t i = 0; i < ballots_.size(); ++i) {
    for (auto j : ballots_[i].approvals()) m.set(i, j, 1);
  }
  return m;
}

BetaMatrix::BetaMatrix(Rational k, std::size_t rows, std::size_t cols, std::vector<BetaEntry> entries)
    : k_(std::move(k)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (k_ < 1) throw DomainError(DomainErrorKind::WeightBelowOne, "k = " + to_string(k_));
  if (entries_.size() != rows_ * cols_) {
    throw DomainError(DomainErrorKind::DimensionMismatch, "entry count does not match rows x cols");
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    auto row = entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    if (std::count(row, row + static_cast<std::ptrdiff_t>(cols_), BetaEntry::First) != 1) {
      throw DomainError(DomainErrorKind::InconsistentBallot,
                        "row " + std::to_string(i + 1) + " must hold exactly one k entry");
    }
  }
}

namespace {

std::vector<BetaEntry> flatten(const std::vector<std::vector<BetaEntry>>& rows) {
  std::vector<BetaEntry> out;
  const auto cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw DomainError(DomainErrorKind::DimensionMismatch, "ragged beta matrix");
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace

BetaMatrix::BetaMatrix(Rational k, const std::vector<std::vector<BetaEntry>>& rows)
    : BetaMatrix(std::move(k), rows.size(), rows.empty() ? 0 : rows.front().size(), flatten(rows)) {}

Rational BetaMatrix::value(std::size_t row, std::size_t col) const {
  switch (entry(row, col)) {
    case BetaEntry::None: return 0;
    case BetaEntry::Approve: return 1;
    case BetaEntry::First: return k_;
  }
  return 0;
}

std::vector<std::vector<Rational>> BetaMatrix::values() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = value(i, j);
  }
  return out;
}

PreferenceProfile::PreferenceProfile(CandidateSet candidates, std::vector<VoterPreference> voters)
    : candidates_(std::move(candidates)), voters_(std::move(voters)) {
  const auto c = candidates_.size();
  if (voters_.empty()) throw DomainError(DomainErrorKind::InvalidProfile, "a profile needs at least one voter");
  positions_.assign(voters_.size() * c, c);
  for (std::size_t i = 0; i < voters_.size(); ++i) {
    const auto& v = voters_[i];
    const auto label = "voter " + std::to_string(i + 1);
    if (v.ranking.size() != c) throw DomainError(DomainErrorKind::InvalidProfile, label + ": ranking must list every candidate");
    for (std::size_t pos = 0; pos < c; ++pos) {
      auto cand = v.ranking[pos];
      if (cand >= c || positions_[i * c + cand] != c) {
        throw DomainError(DomainErrorKind::InvalidProfile, label + ": ranking is not a permutation");
      }
      positions_[i * c + cand] = pos;
    }
    if (v.approval_cutoff < 1 || v.approval_cutoff > c) {
      throw DomainError(DomainErrorKind::InvalidProfile, label + ": approval cutoff outside [1, c]");
    }
  }
}

BetaMatrix compose_beta(const Election& election, const Rational& k) {
  if (k < 1) throw DomainError(DomainErrorKind::WeightBelowOne, "k = " + to_string(k));
  const auto n = election.voter_count();
  const auto c = election.candidate_count();
  std::vector<BetaEntry> entries(n * c, BetaEntry::None);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ballot = election.ballots()[i];
    for (auto j : ballot.approvals()) entries[i * c + j] = BetaEntry::Approve;
    entries[i * c + ballot.first_choice()] = BetaEntry::First;
  }
  return BetaMatrix(k, n, c, std::move(entries));
}

Election honest_ballots(const PreferenceProfile& profile) {
  std::vector<BallotPair> ballots;
  ballots.reserve(profile.voter_count());
  for (const auto& v : profile.voters()) {
    std::vector<CandidateIndex> approved(v.ranking.begin(),
                                         v.ranking.begin() + static_cast<std::ptrdiff_t>(v.approval_cutoff));
    ballots.emplace_back(v.ranking.front(), std::move(approved));
  }
  return Election(profile.candidates(), std::move(ballots));
}

namespace {

void require_same_shape(const BetaMatrix& beta, const VoteMatrix& m) {
  if (beta.rows() != m.rows() || beta.cols() != m.cols()) {
    throw DomainError(DomainErrorKind::DimensionMismatch,
                      std::to_string(beta.rows()) + "x" + std::to_string(beta.cols()) + " vs " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

}  // namespace

bool validate_regime_plurality(const BetaMatrix& beta, const VoteMatrix& plurality) {
  require_same_shape(beta, plurality);
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    for (std::size_t j = 0; j < beta.cols(); ++j) {
      if ((beta.entry(i, j) == BetaEntry::First) != (plurality.at(i, j) == 1)) return false;
    }
  }
  return true;
}

bool validate_regime_approval(const BetaMatrix& beta, const VoteMatrix& approval) {
  require_same_shape(beta, approval);
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    for (std::size_t j = 0; j < beta.cols(); ++j) {
      if ((beta.entry(i, j) != BetaEntry::None) != (approval.at(i, j) == 1)) return false;
    }
  }
  return true;
}

}  // namespace betavote
