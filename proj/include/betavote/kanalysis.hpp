#pragma once

#include <optional>
#include <span>
#include <vector>

#include "betavote/ballots.hpp"
#include "betavote/rational.hpp"
#include "betavote/tally.hpp"

namespace betavote {

// A range of k inside [1, inf). `hi` empty means unbounded above. A point
// interval (lo == hi, both closed) marks a k where the candidate only ties.
struct KInterval {
  Rational lo{1};
  std::optional<Rational> hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& k) const;
  bool is_point() const { return hi && *hi == lo; }
  bool unbounded() const { return !hi.has_value(); }

  friend bool operator==(const KInterval& a, const KInterval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
  }
};

using KIntervalSet = std::vector<KInterval>;

bool contains(const KIntervalSet& set, const Rational& k);

// Candidates sharing one score line (equal p and equal a). They win together.
struct EnvelopeGroup {
  std::vector<CandidateIndex> candidates;
  Rational value_at_one;  // a
  Rational slope;         // p
  KInterval interval;
};

// Every candidate that wins beta(k) for some k >= 1, grouped by identical
// score line and ordered by ascending plurality score. Consecutive groups
// meet at k = 1 + chain_ratios[i].
struct PotentialWinnerReport {
  std::vector<EnvelopeGroup> groups;
  // (a_{w-1} - a_w) / (p_w - p_{w-1}) for consecutive groups.
  std::vector<Rational> chain_ratios;
  // k values where three or more groups meet, including a three-way tie at k = 1.
  std::vector<Rational> multiway_breakpoints;

  std::vector<CandidateIndex> members() const;
  bool is_member(CandidateIndex candidate) const;
  KIntervalSet interval_for(CandidateIndex candidate) const;
  // Distinct interval endpoints, ascending; always starts with 1.
  std::vector<Rational> breakpoints() const;
  // Winners at k read off the intervals, ascending by candidate index.
  std::vector<CandidateIndex> winners_at(const Rational& k) const;
};

// Pointwise maximum of the lines over k in [1, inf), by a slope-ordered stack
// sweep. Needs at least one line.
PotentialWinnerReport upper_envelope(std::span<const ScoreLine> lines);

PotentialWinnerReport potential_winners(const Election& election);

// Closed-form winning range of `candidate`: the potential winners are found
// from pairwise line comparisons, sorted by p, and the candidate's range is
// bounded by its two neighbours. Empty when the candidate never wins.
KIntervalSet winning_interval(const Election& election, CandidateIndex candidate);

// Chain ratios are non-decreasing.
bool check_chain(const PotentialWinnerReport& report);

// For every k > n, beta(k) winners are plurality winners. Returns n.
Rational plurality_regime_bound(const Election& election);

// For every 1 <= k < 1 + 1/n, beta(k) winners are approval winners.
// Returns 1 + 1/n.
Rational approval_regime_bound(const Election& election);

// One row of the plot-ready step table: winners at k.
struct BreakpointRow {
  Rational k;
  bool is_breakpoint = false;  // false for the midpoint / tail probe rows
  std::vector<CandidateIndex> winners;
};

// Rows at k = 1, every breakpoint, every midpoint between breakpoints and one
// point past the last breakpoint.
std::vector<BreakpointRow> breakpoint_table(const PotentialWinnerReport& report);

}  // namespace betavote
