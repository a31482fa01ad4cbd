#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "betavote/ballots.hpp"
#include "betavote/rational.hpp"

namespace betavote {

enum class Rule { Plurality, Approval, Beta };

const char* to_string(Rule rule);
std::optional<Rule> parse_rule(std::string_view name);

struct ScoreVector {
  Rule rule = Rule::Approval;
  std::optional<Rational> k;  // set for Rule::Beta only
  std::vector<Rational> values;
};

// Column sums of the plurality or approval matrix. Rule::Beta is rejected
// here; use beta_score.
ScoreVector score(const Election& election, Rule rule);

// b_j = a_j + (k - 1) p_j, exact. Throws DomainError for k < 1.
ScoreVector beta_score(const Election& election, const Rational& k);

// Column sums of an explicit beta matrix.
ScoreVector column_sums(const BetaMatrix& beta);

// A candidate's beta score as a function of k: value_at_one + (k - 1) * slope,
// where value_at_one = a_j and slope = p_j.
struct ScoreLine {
  CandidateIndex candidate = 0;
  Rational value_at_one;
  Rational slope;

  Rational at(const Rational& k) const { return value_at_one + (k - 1) * slope; }
};

std::vector<ScoreLine> score_lines(const Election& election);

struct WinnerSet {
  std::vector<CandidateIndex> indices;  // ascending
  Rational score_value;

  bool contains(CandidateIndex j) const;
  std::size_t size() const noexcept { return indices.size(); }
};

// Every candidate attaining the maximum (ties kept). Never empty.
WinnerSet winners(const ScoreVector& scores);

// Uniform draw from the winner set, fixed by `seed`.
CandidateIndex select_winner(const WinnerSet& winners, std::uint64_t seed);

// a is a subset of b (both ascending)
bool is_subset(const WinnerSet& a, const WinnerSet& b);

}  // namespace betavote
