#include "betavote/tally.hpp"

#include <algorithm>
#include <stdexcept>

#include "betavote/errors.hpp"
#include "betavote/random.hpp"

namespace betavote {

const char* to_string(Rule rule) {
  switch (rule) {
    case Rule::Plurality: return "plurality";
    case Rule::Approval: return "approval";
    case Rule::Beta: return "beta";
  }
  return "unknown";
}

std::optional<Rule> parse_rule(std::string_view name) {
  if (name == "plurality") return Rule::Plurality;
  if (name == "approval") return Rule::Approval;
  if (name == "beta") return Rule::Beta;
  return std::nullopt;
}

ScoreVector score(const Election& election, Rule rule) {
  if (rule == Rule::Beta) throw std::invalid_argument("beta scores need a weight; call beta_score");
  ScoreVector sv{rule, std::nullopt, std::vector<Rational>(election.candidate_count(), 0)};
  for (const auto& b : election.ballots()) {
    if (rule == Rule::Plurality) {
      sv.values[b.first_choice()] += 1;
    } else {
      for (auto j : b.approvals()) sv.values[j] += 1;
    }
  }
  return sv;
}

ScoreVector beta_score(const Election& election, const Rational& k) {
  if (k < 1) throw DomainError(DomainErrorKind::WeightBelowOne, "k = " + to_string(k));
  auto approval = score(election, Rule::Approval);
  auto plurality = score(election, Rule::Plurality);
  ScoreVector sv{Rule::Beta, k, std::move(approval.values)};
  const Rational extra = k - 1;
  for (std::size_t j = 0; j < sv.values.size(); ++j) sv.values[j] += extra * plurality.values[j];
  return sv;
}

ScoreVector column_sums(const BetaMatrix& beta) {
  ScoreVector sv{Rule::Beta, beta.k(), std::vector<Rational>(beta.cols(), 0)};
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    for (std::size_t j = 0; j < beta.cols(); ++j) sv.values[j] += beta.value(i, j);
  }
  return sv;
}

std::vector<ScoreLine> score_lines(const Election& election) {
  auto approval = score(election, Rule::Approval);
  auto plurality = score(election, Rule::Plurality);
  std::vector<ScoreLine> lines;
  lines.reserve(election.candidate_count());
  for (std::size_t j = 0; j < election.candidate_count(); ++j) {
    lines.push_back({j, approval.values[j], plurality.values[j]});
  }
  return lines;
}

bool WinnerSet::contains(CandidateIndex j) const { return std::binary_search(indices.begin(), indices.end(), j); }

WinnerSet winners(const ScoreVector& scores) {
  if (scores.values.empty()) throw std::invalid_argument("score vector has no candidates");
  WinnerSet ws;
  ws.score_value = *std::max_element(scores.values.begin(), scores.values.end());
  for (std::size_t j = 0; j < scores.values.size(); ++j) {
    if (scores.values[j] == ws.score_value) ws.indices.push_back(j);
  }
  return ws;
}

CandidateIndex select_winner(const WinnerSet& ws, std::uint64_t seed) {
  if (ws.indices.empty()) throw std::invalid_argument("empty winner set");
  if (ws.indices.size() == 1) return ws.indices.front();
  Rng rng(splitmix64(seed));
  return ws.indices[uniform_index(rng, ws.indices.size())];
}

bool is_subset(const WinnerSet& a, const WinnerSet& b) {
  return std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end());
}

}  // namespace betavote
