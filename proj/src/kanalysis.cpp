#include "betavote/kanalysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "betavote/errors.hpp"

namespace betavote {

bool KInterval::contains(const Rational& k) const {
  if (lo_closed ? k < lo : k <= lo) return false;
  if (hi && (hi_closed ? k > *hi : k >= *hi)) return false;
  return true;
}

bool contains(const KIntervalSet& set, const Rational& k) {
  return std::any_of(set.begin(), set.end(), [&k](const KInterval& iv) { return iv.contains(k); });
}

std::vector<CandidateIndex> PotentialWinnerReport::members() const {
  std::vector<CandidateIndex> out;
  for (const auto& g : groups) out.insert(out.end(), g.candidates.begin(), g.candidates.end());
  return out;
}

bool PotentialWinnerReport::is_member(CandidateIndex candidate) const {
  return std::any_of(groups.begin(), groups.end(), [candidate](const EnvelopeGroup& g) {
    return std::find(g.candidates.begin(), g.candidates.end(), candidate) != g.candidates.end();
  });
}

KIntervalSet PotentialWinnerReport::interval_for(CandidateIndex candidate) const {
  for (const auto& g : groups) {
    if (std::find(g.candidates.begin(), g.candidates.end(), candidate) != g.candidates.end()) return {g.interval};
  }
  return {};
}

std::vector<Rational> PotentialWinnerReport::breakpoints() const {
  std::vector<Rational> out{Rational(1)};
  for (const auto& g : groups) {
    out.push_back(g.interval.lo);
    if (g.interval.hi) out.push_back(*g.interval.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CandidateIndex> PotentialWinnerReport::winners_at(const Rational& k) const {
  std::vector<CandidateIndex> out;
  for (const auto& g : groups) {
    if (g.interval.contains(k)) out.insert(out.end(), g.candidates.begin(), g.candidates.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Work in x = k - 1 >= 0, where line j is value_at_one + x * slope.
struct Line {
  std::vector<CandidateIndex> candidates;
  Rational value;
  Rational slope;

  Rational at(const Rational& x) const { return value + x * slope; }
};

// x where `lower` (smaller slope) and `upper` meet.
Rational crossing(const Line& lower, const Line& upper) {
  return (lower.value - upper.value) / (upper.slope - lower.slope);
}

// Identical lines merged; for each slope only the highest line survives.
std::vector<Line> distinct_lines(std::span<const ScoreLine> lines) {
  std::vector<const ScoreLine*> order;
  order.reserve(lines.size());
  for (const auto& l : lines) order.push_back(&l);
  std::sort(order.begin(), order.end(), [](const ScoreLine* a, const ScoreLine* b) {
    if (a->slope != b->slope) return a->slope < b->slope;
    if (a->value_at_one != b->value_at_one) return a->value_at_one > b->value_at_one;
    return a->candidate < b->candidate;
  });

  std::vector<Line> out;
  for (const auto* l : order) {
    if (!out.empty() && out.back().slope == l->slope) {
      // sorted by value descending within a slope: equal joins, lower is dominated
      if (out.back().value == l->value_at_one) out.back().candidates.push_back(l->candidate);
      continue;
    }
    out.push_back({{l->candidate}, l->value_at_one, l->slope});
  }
  return out;
}

KInterval to_k_interval(const Rational& lo_x, const std::optional<Rational>& hi_x) {
  KInterval iv;
  iv.lo = lo_x + 1;
  if (hi_x) iv.hi = *hi_x + 1;
  return iv;
}

}  // namespace

PotentialWinnerReport upper_envelope(std::span<const ScoreLine> input) {
  if (input.empty()) throw std::invalid_argument("upper_envelope needs at least one line");
  auto lines = distinct_lines(input);

  // Stack sweep in ascending slope. Each entry owns [start, next start) of the
  // envelope with positive length; a line that only meets the envelope at the
  // start of the top segment is popped and picked up again below as a point.
  struct Segment {
    std::size_t line;
    Rational start;
  };
  std::vector<Segment> hull;
  for (std::size_t g = 0; g < lines.size(); ++g) {
    Rational start = 0;
    while (!hull.empty()) {
      auto x = crossing(lines[hull.back().line], lines[g]);
      if (x <= hull.back().start) {
        hull.pop_back();
        continue;
      }
      start = x;
      break;
    }
    hull.push_back({g, start});
  }

  std::vector<std::optional<KInterval>> interval_of(lines.size());
  for (std::size_t s = 0; s < hull.size(); ++s) {
    std::optional<Rational> end;
    if (s + 1 < hull.size()) end = hull[s + 1].start;
    interval_of[hull[s].line] = to_k_interval(hull[s].start, end);
  }

  PotentialWinnerReport report;
  // Lines through a segment start at the envelope's height win only there.
  for (std::size_t s = 0; s < hull.size(); ++s) {
    const auto& x = hull[s].start;
    const auto height = lines[hull[s].line].at(x);
    std::size_t meeting = s == 0 ? 1 : 2;
    for (std::size_t g = 0; g < lines.size(); ++g) {
      if (interval_of[g] || lines[g].at(x) != height) continue;
      interval_of[g] = to_k_interval(x, x);
      ++meeting;
    }
    if (meeting >= 3) report.multiway_breakpoints.push_back(x + 1);
  }

  for (std::size_t g = 0; g < lines.size(); ++g) {
    if (!interval_of[g]) continue;
    auto candidates = lines[g].candidates;
    std::sort(candidates.begin(), candidates.end());
    report.groups.push_back({std::move(candidates), lines[g].value, lines[g].slope, *interval_of[g]});
  }
  for (std::size_t i = 1; i < report.groups.size(); ++i) {
    const auto& prev = report.groups[i - 1];
    const auto& cur = report.groups[i];
    report.chain_ratios.push_back((prev.value_at_one - cur.value_at_one) / (cur.slope - prev.slope));
  }
  std::sort(report.multiway_breakpoints.begin(), report.multiway_breakpoints.end());
  return report;
}

PotentialWinnerReport potential_winners(const Election& election) {
  auto lines = score_lines(election);
  return upper_envelope(lines);
}

namespace {

struct PairwiseRange {
  Rational lo;  // in x = k - 1
  std::optional<Rational> hi;
};

// Where line j is at least every other line: the max of the crossings with
// flatter lines up to the min of the crossings with steeper ones.
std::optional<PairwiseRange> pairwise_range(const std::vector<ScoreLine>& lines, std::size_t j) {
  PairwiseRange r{0, std::nullopt};
  const auto& me = lines[j];
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i == j) continue;
    const auto& other = lines[i];
    if (other.slope == me.slope) {
      if (other.value_at_one > me.value_at_one) return std::nullopt;
    } else if (other.slope < me.slope) {
      Rational x = (other.value_at_one - me.value_at_one) / (me.slope - other.slope);
      if (x > r.lo) r.lo = x;
    } else {
      Rational x = (me.value_at_one - other.value_at_one) / (other.slope - me.slope);
      if (!r.hi || x < *r.hi) r.hi = x;
    }
  }
  if (r.hi && *r.hi < r.lo) return std::nullopt;
  return r;
}

}  // namespace

KIntervalSet winning_interval(const Election& election, CandidateIndex candidate) {
  if (candidate >= election.candidate_count()) {
    throw DomainError(DomainErrorKind::UnknownCandidate, "candidate index " + std::to_string(candidate));
  }
  auto lines = score_lines(election);

  // Potential winners, one representative per distinct (p, a).
  std::vector<const ScoreLine*> members;
  for (std::size_t j = 0; j < lines.size(); ++j) {
    if (!pairwise_range(lines, j)) continue;
    bool duplicate = std::any_of(members.begin(), members.end(), [&](const ScoreLine* m) {
      return m->slope == lines[j].slope && m->value_at_one == lines[j].value_at_one;
    });
    if (!duplicate) members.push_back(&lines[j]);
  }
  std::sort(members.begin(), members.end(), [](const ScoreLine* a, const ScoreLine* b) { return a->slope < b->slope; });

  const auto& me = lines[candidate];
  auto pos = std::find_if(members.begin(), members.end(), [&](const ScoreLine* m) {
    return m->slope == me.slope && m->value_at_one == me.value_at_one;
  });
  if (pos == members.end()) return {};

  // Neighbour bounds; the first member has no lower bound, the last no upper.
  KInterval iv;
  iv.lo = 1;
  if (pos != members.begin()) {
    const auto* prev = *(pos - 1);
    iv.lo = 1 + (prev->value_at_one - me.value_at_one) / (me.slope - prev->slope);
  }
  if (pos + 1 != members.end()) {
    const auto* next = *(pos + 1);
    iv.hi = 1 + (me.value_at_one - next->value_at_one) / (next->slope - me.slope);
  }

  auto direct = pairwise_range(lines, candidate);
  if (!direct || direct->lo + 1 != iv.lo || (direct->hi ? std::optional<Rational>(*direct->hi + 1) : std::nullopt) != iv.hi) {
    throw std::logic_error("neighbour bounds disagree with pairwise bounds");
  }
  return {iv};
}

bool check_chain(const PotentialWinnerReport& report) {
  return std::is_sorted(report.chain_ratios.begin(), report.chain_ratios.end());
}

Rational plurality_regime_bound(const Election& election) { return Rational(election.voter_count()); }

Rational approval_regime_bound(const Election& election) {
  return 1 + Rational(1) / Rational(election.voter_count());
}

std::vector<BreakpointRow> breakpoint_table(const PotentialWinnerReport& report) {
  auto points = report.breakpoints();
  std::vector<BreakpointRow> rows;
  for (std::size_t i = 0; i < points.size(); ++i) {
    rows.push_back({points[i], true, report.winners_at(points[i])});
    Rational probe = i + 1 < points.size() ? Rational((points[i] + points[i + 1]) / 2) : Rational(points[i] + 1);
    rows.push_back({probe, false, report.winners_at(probe)});
  }
  return rows;
}

}  // namespace betavote
