#pragma once

// Random inputs for the property tests. Deliberately built from the standard
// distributions rather than the library's own sampling helpers.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "betavote/ballots.hpp"

namespace betavote::oracle {

struct ElectionGen {
  std::size_t max_voters = 10;
  std::size_t max_candidates = 6;
  std::size_t min_voters = 1;
  std::size_t min_candidates = 1;
};

inline Election random_election(std::mt19937_64& rng, const ElectionGen& gen = {}) {
  std::uniform_int_distribution<std::size_t> voters(gen.min_voters, gen.max_voters);
  std::uniform_int_distribution<std::size_t> cands(gen.min_candidates, gen.max_candidates);
  const auto n = voters(rng);
  const auto c = cands(rng);
  std::uniform_int_distribution<std::size_t> pick(0, c - 1);
  std::bernoulli_distribution coin(0.5);
  std::vector<BallotPair> ballots;
  for (std::size_t i = 0; i < n; ++i) {
    const auto first = pick(rng);
    std::vector<CandidateIndex> approvals{first};
    for (std::size_t j = 0; j < c; ++j) {
      if (j != first && coin(rng)) approvals.push_back(j);
    }
    ballots.emplace_back(first, std::move(approvals));
  }
  return Election(CandidateSet::numbered(c), std::move(ballots));
}

inline PreferenceProfile random_rankings(std::mt19937_64& rng, std::size_t n, std::size_t c) {
  std::uniform_int_distribution<std::size_t> cutoff(1, c);
  std::vector<VoterPreference> voters;
  for (std::size_t i = 0; i < n; ++i) {
    VoterPreference v;
    v.ranking.resize(c);
    std::iota(v.ranking.begin(), v.ranking.end(), CandidateIndex{0});
    std::shuffle(v.ranking.begin(), v.ranking.end(), rng);
    v.approval_cutoff = cutoff(rng);
    voters.push_back(std::move(v));
  }
  return PreferenceProfile(CandidateSet::numbered(c), std::move(voters));
}

// Rational k >= 1 with a small denominator, skewed towards the interesting
// range [1, n + 2].
inline Rational random_k(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> den(1, 12);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(d, d * static_cast<long>(n + 2));
  return make_rational(num(rng), d);
}

}  // namespace betavote::oracle
