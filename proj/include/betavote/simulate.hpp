#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betavote/ballots.hpp"
#include "betavote/criteria.hpp"
#include "betavote/rational.hpp"

namespace betavote {

struct IntRange {
  std::size_t lo = 1;
  std::size_t hi = 1;
};

// A weight that may depend on the sample's voter count n and candidate count
// c: a literal rational, or one of n, n+1, 1+1/n, 1+1/(2n), c, c-1.
// Resolved values below 1 are clamped to 1.
class KExpr {
 public:
  static std::optional<KExpr> parse(std::string_view text);
  static KExpr literal(Rational k);

  Rational resolve(std::size_t voters, std::size_t candidates) const;
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const KExpr& a, const KExpr& b) { return a.text_ == b.text_; }

 private:
  enum class Form { Literal, N, NPlusOne, OnePlusInvN, OnePlusInvTwoN, C, CMinusOne };
  KExpr(Form form, Rational literal, std::string text)
      : form_(form), literal_(std::move(literal)), text_(std::move(text)) {}

  Form form_;
  Rational literal_;
  std::string text_;
};

struct SimConfig {
  IntRange voters{1, 8};
  IntRange candidates{1, 5};
  std::size_t samples = 1000;
  std::vector<KExpr> k_grid;
  std::uint64_t seed = 0;

  // Throws DomainError(InvalidConfig).
  void validate() const;
};

// Counts for one k expression. Fractions are count / samples.
struct KAgreement {
  std::string k_expr;
  std::uint64_t samples = 0;
  std::uint64_t beta_subset_plurality = 0;
  std::uint64_t beta_equals_plurality = 0;
  std::uint64_t beta_subset_approval = 0;
  std::uint64_t beta_equals_approval = 0;
  std::uint64_t beta_ties = 0;  // more than one beta(k) winner

  double fraction(std::uint64_t count) const { return samples ? static_cast<double>(count) / samples : 0.0; }
  friend bool operator==(const KAgreement&, const KAgreement&) = default;
};

// Integer counters only, so merging is associative and commutative and the
// result does not depend on how samples were split across threads.
struct AgreementStats {
  std::vector<KAgreement> per_k;
  std::uint64_t samples = 0;
  std::uint64_t potential_winner_total = 0;

  double mean_potential_winners() const {
    return samples ? static_cast<double>(potential_winner_total) / samples : 0.0;
  }
  void merge(const AgreementStats& other);
  friend bool operator==(const AgreementStats&, const AgreementStats&) = default;
};

// Uniform random rankings and approval cutoffs uniform on [1, c].
PreferenceProfile random_profile(std::size_t voters, std::size_t candidates, std::uint64_t seed);

struct Sample {
  PreferenceProfile profile;
  Election election;  // honest ballots of `profile`
};

// Sample `index` of a run: sizes and profile come from a seed derived from
// (config.seed, index) alone.
Sample draw_sample(const SimConfig& config, std::uint64_t index);

// `threads` = 0 picks BETAVOTE_THREADS or the hardware concurrency.
AgreementStats run_agreement(const SimConfig& config, unsigned threads = 0);

enum class SearchTarget {
  ApprovalNonPareto,  // approval (k = 1) elects a Pareto-dominated candidate
  BetaNonPareto,      // beta(k) for some k in the grid does
  ConjectureProbe,    // plurality and approval winners all Pareto, some beta(k) winner is not
};

const char* to_string(SearchTarget target);
std::optional<SearchTarget> parse_search_target(std::string_view name);

struct SearchResult {
  Witness witness;
  std::string k_expr;
  std::uint64_t sample_index = 0;
  std::size_t original_voters = 0;
  std::size_t original_candidates = 0;
};

// Scans samples in order and returns the first hit, shrunk by greedy voter
// deletion and then candidate deletion while it still falsifies. The shrinker
// never goes below the lower ends of the configured ranges.
std::optional<SearchResult> search_counterexample(SearchTarget target, const SimConfig& config);

// Whether `profile` falsifies `target` at weight `k`; used by the search and
// to re-verify its witnesses.
bool falsifies(SearchTarget target, const PreferenceProfile& profile, const Rational& k);

unsigned default_threads();

}  // namespace betavote
