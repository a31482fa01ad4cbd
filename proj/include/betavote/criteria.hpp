#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "betavote/ballots.hpp"
#include "betavote/rational.hpp"

namespace betavote {

enum class Criterion { NonDictatorship, Monotonicity, UnanimousWinner, Pareto };

const char* to_string(Criterion criterion);
std::optional<Criterion> parse_criterion(std::string_view name);

// A single-cell edit of the beta matrix: (voter, candidate) goes from -> to.
struct Perturbation {
  std::size_t voter = 0;
  CandidateIndex candidate = 0;
  Rational from;
  Rational to;

  bool is_raise() const { return to > from; }
};

// Everything needed to replay a failed check without the code that found it.
struct Witness {
  std::optional<Election> election;
  std::optional<PreferenceProfile> profile;
  Rational k{1};
  std::optional<CandidateIndex> candidate;  // the candidate the criterion trips on
  std::optional<CandidateIndex> rival;      // e.g. the unanimously preferred alternative
  std::optional<Perturbation> perturbation;
  std::string description;
};

struct ProbeOutcome {
  std::size_t voter = 0;
  CandidateIndex favourite = 0;
  Rational k;
  bool defeated = false;
};

struct CriterionVerdict {
  Criterion criterion = Criterion::Pareto;
  bool holds = true;
  std::optional<Witness> witness;  // present iff !holds
  std::size_t checks = 0;          // perturbations, winners or probes examined
  std::vector<ProbeOutcome> probes;
  std::vector<std::string> notes;
};

// Candidates holding the row maximum in every row.
std::vector<CandidateIndex> unanimous_winners(const BetaMatrix& beta);
std::optional<CandidateIndex> unanimous_winner(const BetaMatrix& beta);

// For any k > 1 the row maximum is the first choice, so this is the candidate
// every voter names first.
std::optional<CandidateIndex> unanimous_winner(const Election& election);

// Every unanimous winner of compose_beta(election, k) is a beta(k) winner.
CriterionVerdict check_unanimous_winner(const Election& election, const Rational& k);

// Raises a winner's cell (0 -> 1, 1 -> k) or lowers a loser's (k -> 1,
// 1 -> 0), re-tallies, and checks the winner still wins / the loser still
// loses. Elections with n * c <= 20 are checked exhaustively and `trials` is
// ignored; larger ones get `trials` random edits drawn from `seed`.
CriterionVerdict check_monotonicity(const Election& election, const Rational& k, std::size_t trials,
                                    std::uint64_t seed);

// True when the witness's perturbation really unseats a winner or elects a
// loser. Recomputes everything from the witness alone.
bool recheck_monotonicity(const Witness& witness);

std::vector<CandidateIndex> pareto_winners(const PreferenceProfile& profile);

// A rival every voter ranks above `candidate`, if any.
std::optional<CandidateIndex> pareto_dominator(const PreferenceProfile& profile, CandidateIndex candidate);

// Tallies the honest ballots of `profile` under beta(k) and checks every
// winner is Pareto. For k > c - 1 it also checks every winner holds at least
// one first-choice vote.
CriterionVerdict check_pareto(const PreferenceProfile& profile, const Rational& k);

// True when the witness's candidate is a beta(k) winner of the profile's
// honest ballots and is either Pareto-dominated or (for k > c - 1) holds no
// first-choice vote.
bool recheck_pareto(const Witness& witness);

using FavouriteFn = std::function<CandidateIndex(std::size_t voter)>;

// For each voter v: v gives k to favourite(v) and approves nothing else, every
// other voter gives k to a different candidate and nothing to favourite(v).
// Records whether v's favourite loses at each sampled k. With no explicit
// `weights` a default spread including 1, n, n + 1, c - 1 and c is used.
// Throws DomainError for n < 3 or c < 2.
CriterionVerdict dictatorship_probe(std::size_t candidates, std::size_t voters, const FavouriteFn& favourite,
                                    std::span<const Rational> weights = {});

}  // namespace betavote
