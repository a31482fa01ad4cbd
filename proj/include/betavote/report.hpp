#pragma once

#include <string>

#include "betavote/criteria.hpp"
#include "betavote/io.hpp"
#include "betavote/kanalysis.hpp"
#include "betavote/simulate.hpp"
#include "betavote/tally.hpp"

namespace betavote {

// Every rational is written as an exact "num/den" string; a sibling
// "*_decimal" number is a convenience only.

// {"rule":"beta","k":"5/2","k_decimal":2.5,"scores":{"A":"15/2",...},
//  "scores_decimal":{...},"winners":["A"]}
Json score_report(const CandidateSet& candidates, const ScoreVector& scores);

// {"candidate":"B","intervals":[{"lo":"2","hi":"3","lo_closed":true,"hi_closed":true}]}
// with "inf" for an unbounded hi.
Json interval_report(const CandidateSet& candidates, CandidateIndex candidate, const KIntervalSet& intervals);

// Per-candidate interval reports plus the potential-winner summary.
Json envelope_report(const CandidateSet& candidates, const PotentialWinnerReport& report);

// k <TAB> k_decimal <TAB> kind <TAB> winners (comma separated ids)
std::string breakpoint_tsv(const CandidateSet& candidates, const PotentialWinnerReport& report);

Json verdict_report(const CriterionVerdict& verdict, const CandidateSet& candidates);
Json witness_report(const Witness& witness, const CandidateSet& candidates);

Json config_report(const SimConfig& config);
Json stats_report(const AgreementStats& stats);
std::string stats_tsv(const AgreementStats& stats);

Json search_report(SearchTarget target, const std::optional<SearchResult>& result);

// Reads {"n_range":[lo,hi],"c_range":[lo,hi],"samples":N,"k_grid":["1","n+1",...]}.
// Missing keys keep SimConfig defaults. Throws ParseError.
SimConfig parse_sim_config(std::string_view bytes);

}  // namespace betavote
