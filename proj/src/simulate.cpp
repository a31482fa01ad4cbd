#include "betavote/simulate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "betavote/errors.hpp"
#include "betavote/kanalysis.hpp"
#include "betavote/random.hpp"
#include "betavote/tally.hpp"

namespace betavote {

std::optional<KExpr> KExpr::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') compact.push_back(ch);
  }
  if (compact == "n") return KExpr(Form::N, 0, compact);
  if (compact == "n+1") return KExpr(Form::NPlusOne, 0, compact);
  if (compact == "1+1/n") return KExpr(Form::OnePlusInvN, 0, compact);
  if (compact == "1+1/(2n)") return KExpr(Form::OnePlusInvTwoN, 0, compact);
  if (compact == "c") return KExpr(Form::C, 0, compact);
  if (compact == "c-1") return KExpr(Form::CMinusOne, 0, compact);
  auto value = parse_rational(compact);
  if (!value || *value < 1) return std::nullopt;
  return literal(*value);
}

KExpr KExpr::literal(Rational k) {
  auto text = to_string(k);
  return KExpr(Form::Literal, std::move(k), std::move(text));
}

Rational KExpr::resolve(std::size_t voters, std::size_t candidates) const {
  const Rational n(voters);
  const Rational c(candidates);
  Rational k;
  switch (form_) {
    case Form::Literal: k = literal_; break;
    case Form::N: k = n; break;
    case Form::NPlusOne: k = n + 1; break;
    case Form::OnePlusInvN: k = 1 + 1 / n; break;
    case Form::OnePlusInvTwoN: k = 1 + 1 / (2 * n); break;
    case Form::C: k = c; break;
    case Form::CMinusOne: k = c - 1; break;
  }
  k.canonicalize();
  return k < 1 ? Rational(1) : k;
}

void SimConfig::validate() const {
  if (voters.lo < 1 || voters.lo > voters.hi) throw DomainError(DomainErrorKind::InvalidConfig, "voter range must satisfy 1 <= lo <= hi");
  if (candidates.lo < 1 || candidates.lo > candidates.hi) {
    throw DomainError(DomainErrorKind::InvalidConfig, "candidate range must satisfy 1 <= lo <= hi");
  }
  if (samples < 1) throw DomainError(DomainErrorKind::InvalidConfig, "samples must be >= 1");
}

void AgreementStats::merge(const AgreementStats& other) {
  if (per_k.empty()) per_k = other.per_k;
  else {
    for (std::size_t i = 0; i < per_k.size() && i < other.per_k.size(); ++i) {
      auto& mine = per_k[i];
      const auto& theirs = other.per_k[i];
      mine.samples += theirs.samples;
      mine.beta_subset_plurality += theirs.beta_subset_plurality;
      mine.beta_equals_plurality += theirs.beta_equals_plurality;
      mine.beta_subset_approval += theirs.beta_subset_approval;
      mine.beta_equals_approval += theirs.beta_equals_approval;
      mine.beta_ties += theirs.beta_ties;
    }
  }
  samples += other.samples;
  potential_winner_total += other.potential_winner_total;
}

PreferenceProfile random_profile(std::size_t voters, std::size_t candidates, std::uint64_t seed) {
  Rng rng(splitmix64(seed));
  std::vector<VoterPreference> prefs;
  prefs.reserve(voters);
  for (std::size_t v = 0; v < voters; ++v) {
    VoterPreference pref;
    pref.ranking.resize(candidates);
    std::iota(pref.ranking.begin(), pref.ranking.end(), CandidateIndex{0});
    shuffle(pref.ranking, rng);
    pref.approval_cutoff = uniform_between(rng, 1, candidates);
    prefs.push_back(std::move(pref));
  }
  return PreferenceProfile(CandidateSet::numbered(candidates), std::move(prefs));
}

Sample draw_sample(const SimConfig& config, std::uint64_t index) {
  const auto seed = derive_seed(config.seed, index);
  Rng rng(seed);
  const auto n = uniform_between(rng, config.voters.lo, config.voters.hi);
  const auto c = uniform_between(rng, config.candidates.lo, config.candidates.hi);
  auto profile = random_profile(n, c, rng());
  auto election = honest_ballots(profile);
  return {std::move(profile), std::move(election)};
}

namespace {

bool same(const WinnerSet& a, const WinnerSet& b) { return a.indices == b.indices; }

AgreementStats run_range(const SimConfig& config, std::uint64_t begin, std::uint64_t end) {
  AgreementStats stats;
  for (const auto& expr : config.k_grid) stats.per_k.push_back({expr.text()});
  for (auto index = begin; index < end; ++index) {
    auto sample = draw_sample(config, index);
    const auto& e = sample.election;
    const auto plurality = winners(score(e, Rule::Plurality));
    const auto approval = winners(score(e, Rule::Approval));
    ++stats.samples;
    stats.potential_winner_total += potential_winners(e).members().size();
    for (std::size_t i = 0; i < config.k_grid.size(); ++i) {
      const auto k = config.k_grid[i].resolve(e.voter_count(), e.candidate_count());
      const auto beta = winners(beta_score(e, k));
      auto& row = stats.per_k[i];
      ++row.samples;
      row.beta_subset_plurality += is_subset(beta, plurality);
      row.beta_equals_plurality += same(beta, plurality);
      row.beta_subset_approval += is_subset(beta, approval);
      row.beta_equals_approval += same(beta, approval);
      row.beta_ties += beta.size() > 1;
    }
  }
  return stats;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("BETAVOTE_THREADS")) {
    char* end = nullptr;
    auto value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

AgreementStats run_agreement(const SimConfig& config, unsigned threads) {
  config.validate();
  if (threads == 0) threads = default_threads();
  const std::uint64_t total = config.samples;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));

  std::vector<AgreementStats> parts(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const auto begin = total * t / threads;
    const auto end = total * (t + 1) / threads;
    workers.emplace_back([&parts, &config, t, begin, end] { parts[t] = run_range(config, begin, end); });
  }
  for (auto& w : workers) w.join();

  AgreementStats merged;
  for (const auto& part : parts) merged.merge(part);
  if (merged.per_k.empty()) {
    for (const auto& expr : config.k_grid) merged.per_k.push_back({expr.text()});
  }
  return merged;
}

const char* to_string(SearchTarget target) {
  switch (target) {
    case SearchTarget::ApprovalNonPareto: return "approval_non_pareto";
    case SearchTarget::BetaNonPareto: return "beta_non_pareto";
    case SearchTarget::ConjectureProbe: return "conjecture_probe";
  }
  return "unknown";
}

std::optional<SearchTarget> parse_search_target(std::string_view name) {
  if (name == "approval_non_pareto") return SearchTarget::ApprovalNonPareto;
  if (name == "beta_non_pareto" || name == "beta_non_pareto_below_bound") return SearchTarget::BetaNonPareto;
  if (name == "conjecture_probe") return SearchTarget::ConjectureProbe;
  return std::nullopt;
}

namespace {

bool all_pareto(const PreferenceProfile& profile, const WinnerSet& ws) {
  return std::none_of(ws.indices.begin(), ws.indices.end(),
                      [&profile](CandidateIndex w) { return pareto_dominator(profile, w).has_value(); });
}

}  // namespace

bool falsifies(SearchTarget target, const PreferenceProfile& profile, const Rational& k) {
  switch (target) {
    case SearchTarget::ApprovalNonPareto:
      return !check_pareto(profile, 1).holds;
    case SearchTarget::BetaNonPareto:
      return !check_pareto(profile, k).holds;
    case SearchTarget::ConjectureProbe: {
      auto election = honest_ballots(profile);
      if (!all_pareto(profile, winners(score(election, Rule::Plurality)))) return false;
      if (!all_pareto(profile, winners(score(election, Rule::Approval)))) return false;
      return !all_pareto(profile, winners(beta_score(election, k)));
    }
  }
  return false;
}

namespace {

PreferenceProfile without_voter(const PreferenceProfile& p, std::size_t voter) {
  auto voters = p.voters();
  voters.erase(voters.begin() + static_cast<std::ptrdiff_t>(voter));
  return PreferenceProfile(p.candidates(), std::move(voters));
}

PreferenceProfile without_candidate(const PreferenceProfile& p, CandidateIndex gone) {
  std::vector<std::string> ids;
  for (CandidateIndex j = 0; j < p.candidate_count(); ++j) {
    if (j != gone) ids.push_back(p.candidates().id(j));
  }
  std::vector<VoterPreference> voters;
  for (const auto& v : p.voters()) {
    VoterPreference next;
    std::size_t approved = 0;
    for (std::size_t pos = 0; pos < v.ranking.size(); ++pos) {
      auto j = v.ranking[pos];
      if (j == gone) continue;
      next.ranking.push_back(j > gone ? j - 1 : j);
      if (pos < v.approval_cutoff) ++approved;
    }
    next.approval_cutoff = std::max<std::size_t>(1, approved);
    voters.push_back(std::move(next));
  }
  return PreferenceProfile(CandidateSet(std::move(ids)), std::move(voters));
}

PreferenceProfile shrink(PreferenceProfile profile, const SimConfig& config,
                         const std::function<bool(const PreferenceProfile&)>& still_fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < profile.voter_count() && profile.voter_count() > config.voters.lo;) {
      auto smaller = without_voter(profile, v);
      if (still_fails(smaller)) {
        profile = std::move(smaller);
        changed = true;
      } else {
        ++v;
      }
    }
    for (CandidateIndex j = 0; j < profile.candidate_count() && profile.candidate_count() > config.candidates.lo;) {
      auto smaller = without_candidate(profile, j);
      if (still_fails(smaller)) {
        profile = std::move(smaller);
        changed = true;
      } else {
        ++j;
      }
    }
  }
  return profile;
}

}  // namespace

std::optional<SearchResult> search_counterexample(SearchTarget target, const SimConfig& config) {
  config.validate();
  std::vector<KExpr> grid = config.k_grid;
  if (target == SearchTarget::ApprovalNonPareto || grid.empty()) grid = {KExpr::literal(1)};

  for (std::uint64_t index = 0; index < config.samples; ++index) {
    auto sample = draw_sample(config, index);
    for (const auto& expr : grid) {
      auto k_for = [&expr](const PreferenceProfile& p) { return expr.resolve(p.voter_count(), p.candidate_count()); };
      if (!falsifies(target, sample.profile, k_for(sample.profile))) continue;

      auto minimal = shrink(sample.profile, config, [&](const PreferenceProfile& p) {
        return falsifies(target, p, k_for(p));
      });
      const auto k = k_for(minimal);
      SearchResult result;
      result.k_expr = expr.text();
      result.sample_index = index;
      result.original_voters = sample.profile.voter_count();
      result.original_candidates = sample.profile.candidate_count();

      auto election = honest_ballots(minimal);
      Witness& w = result.witness;
      w.election = election;
      w.k = k;
      if (target == SearchTarget::ConjectureProbe) {
        auto ws = winners(beta_score(election, k));
        for (auto c : ws.indices) {
          if (auto rival = pareto_dominator(minimal, c)) {
            w.candidate = c;
            w.rival = rival;
            break;
          }
        }
        w.description = "plurality and approval winners are Pareto but a beta(k) winner is not";
      } else {
        auto verdict = check_pareto(minimal, k);
        w.candidate = verdict.witness->candidate;
        w.rival = verdict.witness->rival;
        w.description = verdict.witness->description;
      }
      w.profile = std::move(minimal);
      return result;
    }
  }
  return std::nullopt;
}

}  // namespace betavote
