#include <gtest/gtest.h>

#include <random>

#include "betavote/criteria.hpp"
#include "betavote/errors.hpp"
#include "betavote/io.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace betavote;

namespace {

Election parse(std::string_view text) { return parse_election(text, BallotFormat::Csv); }

Election e1() { return parse("#candidates:A,B,C\nA;A\nB;A,B\nB;A,B\nC;A,B,C\nC;A,B,C\nC;A,B,C\n"); }

PreferenceProfile tie_profile() {
  return parse_profile(R"({"candidates":["C1","C2"],"voters":[
    {"ranking":["C1","C2"],"approve_top":2},{"ranking":["C1","C2"],"approve_top":2}]})");
}

Witness edit_witness(const Election& e, const Rational& k, Perturbation p) {
  Witness w;
  w.election = e;
  w.k = k;
  w.candidate = p.candidate;
  w.perturbation = std::move(p);
  return w;
}

}  // namespace

TEST(CriterionNames, RoundTrip) {
  for (auto c : {Criterion::NonDictatorship, Criterion::Monotonicity, Criterion::UnanimousWinner, Criterion::Pareto}) {
    EXPECT_EQ(parse_criterion(to_string(c)), c);
  }
  EXPECT_FALSE(parse_criterion("condorcet").has_value());
}

TEST(UnanimousWinner, EveryoneNamesTheSameFirstChoice) {
  auto e = parse("A;A,B\nA;A\nA;A,C\n");
  EXPECT_EQ(unanimous_winner(e), 0u);
  EXPECT_EQ(winners(beta_score(e, 2)).indices, (std::vector<CandidateIndex>{0}));
  EXPECT_TRUE(check_unanimous_winner(e, 2).holds);
}

TEST(UnanimousWinner, DifferentFirstChoicesHaveNone) {
  auto e = parse("A;A,B\nB;A,B\n");
  EXPECT_FALSE(unanimous_winner(e).has_value());
  // at k = 1 approval ties make both row maxima everywhere
  EXPECT_EQ(unanimous_winners(compose_beta(e, 1)), (std::vector<CandidateIndex>{0, 1}));
  auto v = check_unanimous_winner(e, 1);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.checks, 2u);
  auto none = check_unanimous_winner(e, 3);
  EXPECT_TRUE(none.holds);
  EXPECT_EQ(none.checks, 0u);
}

TEST(UnanimousWinner, TextbookElections) {
  auto split = parse("#candidates:C1,C2\nC1;C1,C2\nC2;C2\n");
  EXPECT_FALSE(unanimous_winner(split).has_value());
  auto shared = parse("#candidates:C1,C2\nC1;C1,C2\nC1;C1,C2\n");
  EXPECT_EQ(unanimous_winner(shared), 0u);
  EXPECT_EQ(unanimous_winner(compose_beta(shared, make_rational(5, 4))), 0u);
  EXPECT_TRUE(check_unanimous_winner(shared, make_rational(5, 4)).holds);
}

TEST(UnanimousWinner, RandomElectionsNeverFail) {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 2000; ++trial) {
    auto e = oracle::random_election(rng, {6, 4});
    auto k = oracle::random_k(rng, e.voter_count());
    auto v = check_unanimous_winner(e, k);
    ASSERT_TRUE(v.holds) << write_election_csv(e);
    ASSERT_FALSE(v.witness.has_value());
  }
}

TEST(Monotonicity, HandEditsOnE1AtTwo) {
  auto e = e1();
  const Rational k = 2;
  // B is a winner (7, 7, 6); voter 1 does not approve it
  EXPECT_FALSE(recheck_monotonicity(edit_witness(e, k, {0, 1, 0, 1})));
  // A is a winner; voter 2 approves it without naming it first
  EXPECT_FALSE(recheck_monotonicity(edit_witness(e, k, {1, 0, 1, 2})));
  // C loses; voter 4 gives it k
  EXPECT_FALSE(recheck_monotonicity(edit_witness(e, k, {3, 2, 2, 1})));
  // a witness whose "from" does not match the matrix is rejected outright
  EXPECT_FALSE(recheck_monotonicity(edit_witness(e, k, {3, 2, 1, 0})));
  EXPECT_FALSE(recheck_monotonicity(edit_witness(e, k, {9, 2, 1, 0})));

  auto v = check_monotonicity(e, k, 0, 1);
  EXPECT_TRUE(v.holds);
  EXPECT_GT(v.checks, 0u);
  EXPECT_EQ(v.notes, (std::vector<std::string>{"exhaustive"}));
}

TEST(Monotonicity, SingleVoter) {
  auto e = parse("A;A,B\n");
  auto at_one = check_monotonicity(e, 1, 10, 3);
  EXPECT_TRUE(at_one.holds);
  EXPECT_EQ(at_one.checks, 0u);
  auto at_two = check_monotonicity(e, 2, 10, 3);
  EXPECT_TRUE(at_two.holds);
  EXPECT_EQ(at_two.checks, 1u);
}

TEST(Monotonicity, LargeElectionsUseSeededTrials) {
  std::mt19937_64 rng(5);
  auto e = oracle::random_election(rng, {10, 6, 8, 4});
  ASSERT_GT(e.voter_count() * e.candidate_count(), 20u);
  auto v = check_monotonicity(e, 2, 500, 77);
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.checks, 500u);
  EXPECT_TRUE(v.notes.empty());
}

TEST(Monotonicity, RandomEditsCheckedAgainstEntrywiseRetally) {
  std::mt19937_64 rng(1234);
  std::size_t edits = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    auto e = oracle::random_election(rng, {8, 5});
    const auto n = e.voter_count();
    const auto c = e.candidate_count();
    for (const Rational& k : {Rational(1), Rational(2), Rational(n + 1)}) {
      ASSERT_TRUE(check_monotonicity(e, k, 50, trial).holds);

      // independent: edit one ballot-derived cell and re-add every column
      auto before = oracle::brute_winners(e, k);
      std::uniform_int_distribution<std::size_t> voter(0, n - 1), cand(0, c - 1);
      const auto i = voter(rng);
      const auto j = cand(rng);
      const auto& b = e.ballots()[i];
      Rational cell = b.first_choice() == j ? k : (b.approves(j) ? Rational(1) : Rational(0));
      const bool winner = std::find(before.begin(), before.end(), j) != before.end();
      Rational to = winner ? (cell == 0 ? Rational(1) : k) : (cell == k ? Rational(1) : Rational(0));
      if (to == cell) continue;
      auto scores = oracle::brute_beta_scores(e, k);
      scores[j] += to - cell;
      auto after = oracle::brute_argmax(scores);
      const bool still = std::find(after.begin(), after.end(), j) != after.end();
      ASSERT_EQ(still, winner);
      ++edits;
    }
  }
  EXPECT_GT(edits, 1000u);
}

TEST(Pareto, DominatorAndWinners) {
  auto p = tie_profile();
  EXPECT_EQ(pareto_dominator(p, 1), 0u);
  EXPECT_FALSE(pareto_dominator(p, 0).has_value());
  EXPECT_EQ(pareto_winners(p), (std::vector<CandidateIndex>{0}));
}

TEST(Pareto, ApprovalTieElectsDominatedCandidate) {
  auto v = check_pareto(tie_profile(), 1);
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->candidate, 1u);
  EXPECT_EQ(v.witness->rival, 0u);
  EXPECT_TRUE(recheck_pareto(*v.witness));

  auto moved = *v.witness;
  moved.k = 2;
  EXPECT_FALSE(recheck_pareto(moved));
  EXPECT_TRUE(check_pareto(tie_profile(), 2).holds);
}

TEST(Pareto, BruteForceAgreementAndLargeWeights) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 3000; ++trial) {
    std::uniform_int_distribution<std::size_t> nd(1, 8), cd(1, 5);
    auto p = oracle::random_rankings(rng, nd(rng), cd(rng));
    ASSERT_EQ(pareto_winners(p), oracle::brute_pareto(p));
    const Rational c(p.candidate_count());
    auto at_c = check_pareto(p, c);
    ASSERT_TRUE(at_c.holds) << profile_to_json(p).dump();
    if (c > 1) ASSERT_TRUE(check_pareto(p, c - 1 + make_rational(1, 2)).holds) << profile_to_json(p).dump();
    ASSERT_TRUE(check_pareto(p, Rational(p.voter_count() + 1)).holds) << profile_to_json(p).dump();
    auto at_one = check_pareto(p, 1);
    if (!at_one.holds) ASSERT_TRUE(recheck_pareto(*at_one.witness));
  }
}

TEST(Dictatorship, EveryVoterCanBeOutvoted) {
  for (std::size_t c : {2u, 3u}) {
    auto v = dictatorship_probe(c, 3, [](std::size_t voter) { return voter % 2; });
    EXPECT_TRUE(v.holds);
    EXPECT_FALSE(v.witness.has_value());
    EXPECT_EQ(v.probes.size(), v.checks);
    EXPECT_GE(v.probes.size(), 3u * 6u);
    for (const auto& probe : v.probes) EXPECT_TRUE(probe.defeated);
    EXPECT_EQ(v.notes.size(), 2u);
  }
}

TEST(Dictatorship, ExplicitWeightsAndErrors) {
  std::vector<Rational> ks{1, 100};
  auto v = dictatorship_probe(4, 5, [](std::size_t) { return CandidateIndex{3}; }, ks);
  EXPECT_EQ(v.probes.size(), 10u);
  EXPECT_TRUE(v.holds);

  try {
    dictatorship_probe(3, 2, [](std::size_t) { return CandidateIndex{0}; });
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), DomainErrorKind::InsufficientVoters);
  }
  try {
    dictatorship_probe(1, 3, [](std::size_t) { return CandidateIndex{0}; });
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.kind(), DomainErrorKind::InsufficientCandidates);
  }
  EXPECT_THROW(dictatorship_probe(2, 3, [](std::size_t) { return CandidateIndex{5}; }), DomainError);
}
