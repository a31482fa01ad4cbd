#pragma once

// Brute-force reference computations. None of these call into tally or
// kanalysis: they read raw ballots and evaluate scores point by point.

#include <algorithm>
#include <optional>
#include <vector>

#include "betavote/ballots.hpp"
#include "betavote/kanalysis.hpp"

namespace betavote::oracle {

struct ColumnCounts {
  std::vector<long> plurality;
  std::vector<long> approval;
};

// Per-column counting: for each candidate walk every ballot.
inline ColumnCounts count_columns(const Election& e) {
  ColumnCounts out;
  for (CandidateIndex j = 0; j < e.candidate_count(); ++j) {
    long p = 0;
    long a = 0;
    for (const auto& b : e.ballots()) {
      if (b.first_choice() == j) ++p;
      const auto& ap = b.approvals();
      if (std::find(ap.begin(), ap.end(), j) != ap.end()) ++a;
    }
    out.plurality.push_back(p);
    out.approval.push_back(a);
  }
  return out;
}

// Entrywise beta(k) matrix summation straight from the ballots.
inline std::vector<Rational> brute_beta_scores(const Election& e, const Rational& k) {
  std::vector<Rational> sums(e.candidate_count(), 0);
  for (const auto& b : e.ballots()) {
    for (CandidateIndex j = 0; j < e.candidate_count(); ++j) {
      const auto& ap = b.approvals();
      if (b.first_choice() == j) sums[j] += k;
      else if (std::find(ap.begin(), ap.end(), j) != ap.end()) sums[j] += 1;
    }
  }
  return sums;
}

inline std::vector<CandidateIndex> brute_argmax(const std::vector<Rational>& v) {
  const auto best = *std::max_element(v.begin(), v.end());
  std::vector<CandidateIndex> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == best) out.push_back(j);
  }
  return out;
}

inline std::vector<CandidateIndex> brute_winners(const Election& e, const Rational& k) {
  return brute_argmax(brute_beta_scores(e, k));
}

// k = 1 and every pairwise crossing of score lines at k >= 1, ascending.
inline std::vector<Rational> critical_points(const Election& e) {
  auto counts = count_columns(e);
  std::vector<Rational> pts{Rational(1)};
  const auto c = e.candidate_count();
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      const long dp = counts.plurality[j] - counts.plurality[i];
      if (dp == 0) continue;
      // a_i + (k-1) p_i == a_j + (k-1) p_j
      Rational k = 1 + Rational(counts.approval[i] - counts.approval[j]) / Rational(dp);
      if (k >= 1) pts.push_back(k);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Critical points, midpoints between them, and one point past the last.
inline std::vector<Rational> probe_points(const std::vector<Rational>& critical) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < critical.size(); ++i) {
    out.push_back(critical[i]);
    if (i + 1 < critical.size()) out.push_back((critical[i] + critical[i + 1]) / 2);
  }
  out.push_back(critical.back() + 1);
  return out;
}

// A candidate's winning set is an intersection of half-lines, so it is one
// closed interval whose finite endpoints are critical points.
inline std::vector<KIntervalSet> brute_intervals(const Election& e) {
  const auto critical = critical_points(e);
  const Rational tail = critical.back() + 1;
  std::vector<KIntervalSet> out(e.candidate_count());
  for (CandidateIndex j = 0; j < e.candidate_count(); ++j) {
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& k : critical) {
      auto w = brute_winners(e, k);
      if (std::find(w.begin(), w.end(), j) == w.end()) continue;
      if (!lo) lo = k;
      hi = k;
    }
    if (!lo) continue;
    KInterval iv;
    iv.lo = *lo;
    auto tail_winners = brute_winners(e, tail);
    if (std::find(tail_winners.begin(), tail_winners.end(), j) == tail_winners.end()) iv.hi = *hi;
    out[j].push_back(iv);
  }
  return out;
}

// Pareto winners by direct pairwise comparison of rank positions.
inline std::vector<CandidateIndex> brute_pareto(const PreferenceProfile& p) {
  std::vector<CandidateIndex> out;
  for (CandidateIndex w = 0; w < p.candidate_count(); ++w) {
    bool dominated = false;
    for (CandidateIndex l = 0; l < p.candidate_count() && !dominated; ++l) {
      if (l == w) continue;
      bool all = true;
      for (std::size_t v = 0; v < p.voter_count(); ++v) {
        const auto& r = p.voters()[v].ranking;
        auto pos_l = std::find(r.begin(), r.end(), l) - r.begin();
        auto pos_w = std::find(r.begin(), r.end(), w) - r.begin();
        if (pos_l > pos_w) {
          all = false;
          break;
        }
      }
      dominated = all;
    }
    if (!dominated) out.push_back(w);
  }
  return out;
}

}  // namespace betavote::oracle
