#include "betavote/criteria.hpp"

#include <algorithm>

#include "betavote/errors.hpp"
#include "betavote/random.hpp"
#include "betavote/tally.hpp"

namespace betavote {

const char* to_string(Criterion criterion) {
  switch (criterion) {
    case Criterion::NonDictatorship: return "non_dictatorship";
    case Criterion::Monotonicity: return "monotonicity";
    case Criterion::UnanimousWinner: return "unanimous_winner";
    case Criterion::Pareto: return "pareto";
  }
  return "unknown";
}

std::optional<Criterion> parse_criterion(std::string_view name) {
  if (name == "non_dictatorship") return Criterion::NonDictatorship;
  if (name == "monotonicity") return Criterion::Monotonicity;
  if (name == "unanimous_winner" || name == "unanimous") return Criterion::UnanimousWinner;
  if (name == "pareto") return Criterion::Pareto;
  return std::nullopt;
}

namespace {

using Grid = std::vector<std::vector<Rational>>;

std::vector<Rational> sum_columns(const Grid& grid, std::size_t cols) {
  std::vector<Rational> sums(cols, 0);
  for (const auto& row : grid) {
    for (std::size_t j = 0; j < cols; ++j) sums[j] += row[j];
  }
  return sums;
}

std::vector<CandidateIndex> argmax(const std::vector<Rational>& values) {
  auto best = *std::max_element(values.begin(), values.end());
  std::vector<CandidateIndex> out;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == best) out.push_back(j);
  }
  return out;
}

bool has(const std::vector<CandidateIndex>& set, CandidateIndex j) {
  return std::find(set.begin(), set.end(), j) != set.end();
}

// True when the edit violates monotonicity on the given grid.
bool violates(const Grid& grid, std::size_t cols, const Perturbation& edit) {
  auto before = argmax(sum_columns(grid, cols));
  Grid after = grid;
  after[edit.voter][edit.candidate] = edit.to;
  auto won = argmax(sum_columns(after, cols));
  if (edit.is_raise()) return has(before, edit.candidate) && !has(won, edit.candidate);
  return !has(before, edit.candidate) && has(won, edit.candidate);
}

}  // namespace

std::vector<CandidateIndex> unanimous_winners(const BetaMatrix& beta) {
  std::vector<CandidateIndex> out;
  for (std::size_t j = 0; j < beta.cols(); ++j) {
    bool everywhere = true;
    for (std::size_t i = 0; i < beta.rows() && everywhere; ++i) {
      Rational row_max = 0;
      for (std::size_t jj = 0; jj < beta.cols(); ++jj) row_max = std::max(row_max, beta.value(i, jj));
      everywhere = beta.value(i, j) == row_max;
    }
    if (everywhere) out.push_back(j);
  }
  return out;
}

std::optional<CandidateIndex> unanimous_winner(const BetaMatrix& beta) {
  auto all = unanimous_winners(beta);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<CandidateIndex> unanimous_winner(const Election& election) {
  return unanimous_winner(compose_beta(election, 2));
}

CriterionVerdict check_unanimous_winner(const Election& election, const Rational& k) {
  CriterionVerdict verdict;
  verdict.criterion = Criterion::UnanimousWinner;
  auto beta = compose_beta(election, k);
  auto ws = winners(column_sums(beta));
  for (auto u : unanimous_winners(beta)) {
    ++verdict.checks;
    if (ws.contains(u)) continue;
    verdict.holds = false;
    verdict.witness = Witness{election, std::nullopt, k, u, std::nullopt, std::nullopt,
                              "unanimous winner is not a beta(k) winner"};
    break;
  }
  if (verdict.checks == 0) verdict.notes.push_back("no unanimous winner; holds vacuously");
  return verdict;
}

CriterionVerdict check_monotonicity(const Election& election, const Rational& k, std::size_t trials,
                                    std::uint64_t seed) {
  auto beta = compose_beta(election, k);
  const auto grid = beta.values();
  const auto cols = beta.cols();
  const auto base_winners = argmax(sum_columns(grid, cols));

  std::vector<Perturbation> candidates;
  for (std::size_t i = 0; i < beta.rows(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto cell = beta.entry(i, j);
      const auto& from = grid[i][j];
      if (has(base_winners, j)) {
        if (cell == BetaEntry::None) candidates.push_back({i, j, from, Rational(1)});
        if (cell == BetaEntry::Approve && k > 1) candidates.push_back({i, j, from, k});
      } else {
        if (cell == BetaEntry::First && k > 1) candidates.push_back({i, j, from, Rational(1)});
        if (cell == BetaEntry::Approve) candidates.push_back({i, j, from, Rational(0)});
      }
    }
  }

  CriterionVerdict verdict;
  verdict.criterion = Criterion::Monotonicity;
  auto report = [&](const Perturbation& edit) {
    verdict.holds = false;
    verdict.witness = Witness{election, std::nullopt, k, edit.candidate, std::nullopt, edit,
                              edit.is_raise() ? "raising a winner's entry unseated it"
                                              : "lowering a loser's entry elected it"};
  };

  if (candidates.empty()) {
    verdict.notes.push_back("no applicable single-entry edit; holds vacuously");
    return verdict;
  }
  if (beta.rows() * cols <= 20) {
    verdict.notes.push_back("exhaustive");
    for (const auto& edit : candidates) {
      ++verdict.checks;
      if (violates(grid, cols, edit)) {
        report(edit);
        break;
      }
    }
    return verdict;
  }
  Rng rng(splitmix64(seed));
  for (std::size_t t = 0; t < trials; ++t) {
    const auto& edit = candidates[uniform_index(rng, candidates.size())];
    ++verdict.checks;
    if (violates(grid, cols, edit)) {
      report(edit);
      break;
    }
  }
  return verdict;
}

bool recheck_monotonicity(const Witness& witness) {
  if (!witness.election || !witness.perturbation) return false;
  const auto& edit = *witness.perturbation;
  auto beta = compose_beta(*witness.election, witness.k);
  if (edit.voter >= beta.rows() || edit.candidate >= beta.cols()) return false;
  if (beta.value(edit.voter, edit.candidate) != edit.from) return false;
  return violates(beta.values(), beta.cols(), edit);
}

std::optional<CandidateIndex> pareto_dominator(const PreferenceProfile& profile, CandidateIndex candidate) {
  for (CandidateIndex rival = 0; rival < profile.candidate_count(); ++rival) {
    if (rival == candidate) continue;
    bool unanimous = true;
    for (std::size_t v = 0; v < profile.voter_count() && unanimous; ++v) {
      unanimous = profile.prefers(v, rival, candidate);
    }
    if (unanimous) return rival;
  }
  return std::nullopt;
}

std::vector<CandidateIndex> pareto_winners(const PreferenceProfile& profile) {
  std::vector<CandidateIndex> out;
  for (CandidateIndex j = 0; j < profile.candidate_count(); ++j) {
    if (!pareto_dominator(profile, j)) out.push_back(j);
  }
  return out;
}

CriterionVerdict check_pareto(const PreferenceProfile& profile, const Rational& k) {
  auto election = honest_ballots(profile);
  auto ws = winners(beta_score(election, k));
  auto firsts = score(election, Rule::Plurality);
  const bool above_bound = k > Rational(profile.candidate_count()) - 1;

  CriterionVerdict verdict;
  verdict.criterion = Criterion::Pareto;
  if (above_bound) verdict.notes.push_back("k > c - 1: first-choice support also checked");
  for (auto w : ws.indices) {
    ++verdict.checks;
    if (auto rival = pareto_dominator(profile, w)) {
      verdict.holds = false;
      verdict.witness = Witness{election, profile, k, w, rival, std::nullopt,
                                "beta(k) winner is unanimously less preferred than a rival"};
      return verdict;
    }
    if (above_bound && firsts.values[w] == 0) {
      verdict.holds = false;
      verdict.witness = Witness{election, profile, k, w, std::nullopt, std::nullopt,
                                "beta(k) winner holds no first-choice vote"};
      return verdict;
    }
  }
  return verdict;
}

bool recheck_pareto(const Witness& witness) {
  if (!witness.profile || !witness.candidate) return false;
  const auto& profile = *witness.profile;
  const auto w = *witness.candidate;
  if (w >= profile.candidate_count()) return false;
  auto election = honest_ballots(profile);
  if (!winners(beta_score(election, witness.k)).contains(w)) return false;
  if (pareto_dominator(profile, w)) return true;
  const bool above_bound = witness.k > Rational(profile.candidate_count()) - 1;
  return above_bound && score(election, Rule::Plurality).values[w] == 0;
}

CriterionVerdict dictatorship_probe(std::size_t candidates, std::size_t voters, const FavouriteFn& favourite,
                                    std::span<const Rational> weights) {
  if (voters < 3) throw DomainError(DomainErrorKind::InsufficientVoters, "the probe needs n >= 3, got " + std::to_string(voters));
  if (candidates < 2) throw DomainError(DomainErrorKind::InsufficientCandidates, "the probe needs c >= 2");

  std::vector<Rational> ks(weights.begin(), weights.end());
  if (ks.empty()) {
    const Rational n(voters);
    const Rational c(candidates);
    ks = {Rational(1), make_rational(3, 2), Rational(2), Rational(3), n, n + 1, c, 10 * n};
    if (c - 1 >= 1) ks.push_back(c - 1);
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  }

  CriterionVerdict verdict;
  verdict.criterion = Criterion::NonDictatorship;
  verdict.notes.push_back(
      "refutation only: each voter is shown to lose one constructed election; this does not quantify over all "
      "elections");
  verdict.notes.push_back(
      "plurality uniqueness in the construction needs n - 1 >= 2 opposing voters, i.e. n >= 3");

  const auto roster = CandidateSet::numbered(candidates);
  for (std::size_t v = 0; v < voters; ++v) {
    const auto w = favourite(v);
    if (w >= candidates) throw DomainError(DomainErrorKind::UnknownCandidate, "favourite outside the roster");
    const auto rival = (w + 1) % candidates;
    std::vector<BallotPair> ballots;
    for (std::size_t i = 0; i < voters; ++i) {
      if (i == v) {
        ballots.emplace_back(w, std::vector<CandidateIndex>{w});
      } else {
        ballots.emplace_back(rival, std::vector<CandidateIndex>{rival});
      }
    }
    Election election(roster, std::move(ballots));
    for (const auto& k : ks) {
      const bool defeated = !winners(beta_score(election, k)).contains(w);
      verdict.probes.push_back({v, w, k, defeated});
      ++verdict.checks;
      if (!defeated && verdict.holds) {
        verdict.holds = false;
        verdict.witness = Witness{election, std::nullopt, k, w, rival, std::nullopt,
                                  "voter " + std::to_string(v + 1) + "'s favourite still wins"};
      }
    }
  }
  return verdict;
}

}  // namespace betavote
