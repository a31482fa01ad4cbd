#include "betavote/report.hpp"

#include <sstream>

#include "betavote/errors.hpp"

namespace betavote {

namespace {

Json ids(const CandidateSet& candidates, const std::vector<CandidateIndex>& indices) {
  Json out = Json::array();
  for (auto j : indices) out.push_back(candidates.id(j));
  return out;
}

Json rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string join_ids(const CandidateSet& candidates, const std::vector<CandidateIndex>& indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += candidates.id(indices[i]);
  }
  return out;
}

}  // namespace

Json score_report(const CandidateSet& candidates, const ScoreVector& scores) {
  Json doc;
  doc["rule"] = to_string(scores.rule);
  if (scores.k) {
    doc["k"] = to_string(*scores.k);
    doc["k_decimal"] = to_double(*scores.k);
  }
  Json exact = Json::object();
  Json decimal = Json::object();
  for (std::size_t j = 0; j < scores.values.size(); ++j) {
    exact[candidates.id(j)] = to_string(scores.values[j]);
    decimal[candidates.id(j)] = to_double(scores.values[j]);
  }
  doc["scores"] = std::move(exact);
  doc["scores_decimal"] = std::move(decimal);
  doc["winners"] = ids(candidates, winners(scores).indices);
  return doc;
}

Json interval_report(const CandidateSet& candidates, CandidateIndex candidate, const KIntervalSet& intervals) {
  Json list = Json::array();
  for (const auto& iv : intervals) {
    Json item;
    item["lo"] = to_string(iv.lo);
    item["hi"] = iv.hi ? to_string(*iv.hi) : std::string("inf");
    item["lo_closed"] = iv.lo_closed;
    item["hi_closed"] = iv.hi ? iv.hi_closed : false;
    item["lo_decimal"] = to_double(iv.lo);
    if (iv.hi) item["hi_decimal"] = to_double(*iv.hi);
    list.push_back(std::move(item));
  }
  return Json{{"candidate", candidates.id(candidate)}, {"intervals", std::move(list)}};
}

Json envelope_report(const CandidateSet& candidates, const PotentialWinnerReport& report) {
  Json per_candidate = Json::array();
  for (CandidateIndex j = 0; j < candidates.size(); ++j) {
    per_candidate.push_back(interval_report(candidates, j, report.interval_for(j)));
  }
  Json groups = Json::array();
  for (const auto& g : report.groups) {
    groups.push_back(Json{{"candidates", ids(candidates, g.candidates)},
                          {"approval", to_string(g.value_at_one)},
                          {"plurality", to_string(g.slope)}});
  }
  Json doc;
  doc["potential_winners"] = ids(candidates, report.members());
  doc["groups"] = std::move(groups);
  doc["chain_ratios"] = rationals(report.chain_ratios);
  doc["breakpoints"] = rationals(report.breakpoints());
  doc["multiway_breakpoints"] = rationals(report.multiway_breakpoints);
  doc["intervals"] = std::move(per_candidate);
  return doc;
}

std::string breakpoint_tsv(const CandidateSet& candidates, const PotentialWinnerReport& report) {
  std::ostringstream out;
  out << "k\tk_decimal\tkind\twinners\n";
  for (const auto& row : breakpoint_table(report)) {
    out << to_string(row.k) << '\t' << to_double(row.k) << '\t' << (row.is_breakpoint ? "breakpoint" : "between")
        << '\t' << join_ids(candidates, row.winners) << '\n';
  }
  return out.str();
}

Json witness_report(const Witness& witness, const CandidateSet& candidates) {
  Json doc;
  doc["description"] = witness.description;
  doc["k"] = to_string(witness.k);
  doc["k_decimal"] = to_double(witness.k);
  if (witness.candidate) doc["candidate"] = candidates.id(*witness.candidate);
  if (witness.rival) doc["rival"] = candidates.id(*witness.rival);
  if (witness.perturbation) {
    const auto& p = *witness.perturbation;
    doc["perturbation"] = Json{{"voter", p.voter + 1},
                               {"candidate", candidates.id(p.candidate)},
                               {"from", to_string(p.from)},
                               {"to", to_string(p.to)}};
  }
  if (witness.election) doc["election"] = election_to_json(*witness.election);
  if (witness.profile) doc["profile"] = profile_to_json(*witness.profile);
  return doc;
}

Json verdict_report(const CriterionVerdict& verdict, const CandidateSet& candidates) {
  Json doc;
  doc["criterion"] = to_string(verdict.criterion);
  doc["holds"] = verdict.holds;
  doc["checks"] = verdict.checks;
  doc["notes"] = verdict.notes;
  if (!verdict.probes.empty()) {
    Json probes = Json::array();
    for (const auto& p : verdict.probes) {
      probes.push_back(Json{{"voter", p.voter + 1},
                            {"favourite", candidates.id(p.favourite)},
                            {"k", to_string(p.k)},
                            {"defeated", p.defeated}});
    }
    doc["probes"] = std::move(probes);
  }
  if (verdict.witness) {
    // the witness election may carry its own roster (probe elections do)
    const auto& roster = verdict.witness->election ? verdict.witness->election->candidates() : candidates;
    doc["witness"] = witness_report(*verdict.witness, roster);
  }
  return doc;
}

Json config_report(const SimConfig& config) {
  Json grid = Json::array();
  for (const auto& k : config.k_grid) grid.push_back(k.text());
  return Json{{"n_range", {config.voters.lo, config.voters.hi}},
              {"c_range", {config.candidates.lo, config.candidates.hi}},
              {"samples", config.samples},
              {"k_grid", std::move(grid)},
              {"seed", config.seed}};
}

Json stats_report(const AgreementStats& stats) {
  Json rows = Json::array();
  for (const auto& row : stats.per_k) {
    rows.push_back(Json{{"k", row.k_expr},
                        {"samples", row.samples},
                        {"beta_subset_plurality", row.fraction(row.beta_subset_plurality)},
                        {"beta_equals_plurality", row.fraction(row.beta_equals_plurality)},
                        {"beta_subset_approval", row.fraction(row.beta_subset_approval)},
                        {"beta_equals_approval", row.fraction(row.beta_equals_approval)},
                        {"tie_frequency", row.fraction(row.beta_ties)},
                        {"counts",
                         {{"beta_subset_plurality", row.beta_subset_plurality},
                          {"beta_equals_plurality", row.beta_equals_plurality},
                          {"beta_subset_approval", row.beta_subset_approval},
                          {"beta_equals_approval", row.beta_equals_approval},
                          {"beta_ties", row.beta_ties}}}});
  }
  return Json{{"samples", stats.samples},
              {"mean_potential_winners", stats.mean_potential_winners()},
              {"per_k", std::move(rows)}};
}

std::string stats_tsv(const AgreementStats& stats) {
  std::ostringstream out;
  out << "k\tsamples\tbeta_subset_plurality\tbeta_equals_plurality\tbeta_subset_approval\tbeta_equals_approval"
         "\ttie_frequency\n";
  for (const auto& row : stats.per_k) {
    out << row.k_expr << '\t' << row.samples << '\t' << row.fraction(row.beta_subset_plurality) << '\t'
        << row.fraction(row.beta_equals_plurality) << '\t' << row.fraction(row.beta_subset_approval) << '\t'
        << row.fraction(row.beta_equals_approval) << '\t' << row.fraction(row.beta_ties) << '\n';
  }
  return out.str();
}

Json search_report(SearchTarget target, const std::optional<SearchResult>& result) {
  Json doc;
  doc["target"] = to_string(target);
  doc["found"] = result.has_value();
  if (result) {
    doc["k_expr"] = result->k_expr;
    doc["sample_index"] = result->sample_index;
    doc["original_voters"] = result->original_voters;
    doc["original_candidates"] = result->original_candidates;
    doc["witness"] = witness_report(result->witness, result->witness.profile->candidates());
  }
  return doc;
}

namespace {

IntRange read_range(const Json& doc, const char* key, IntRange fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& node = doc.at(key);
  if (!node.is_array() || node.size() != 2 || !node[0].is_number_unsigned() || !node[1].is_number_unsigned()) {
    throw ParseError(ParseErrorKind::Malformed, 0, std::string("\"") + key + "\" must be [lo, hi]");
  }
  return {node[0].get<std::size_t>(), node[1].get<std::size_t>()};
}

}  // namespace

SimConfig parse_sim_config(std::string_view bytes) {
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw ParseError(ParseErrorKind::Malformed, 0, e.what());
  }
  if (!doc.is_object()) throw ParseError(ParseErrorKind::Malformed, 0, "config must be an object");
  SimConfig config;
  config.voters = read_range(doc, "n_range", config.voters);
  config.candidates = read_range(doc, "c_range", config.candidates);
  if (doc.contains("samples")) {
    if (!doc.at("samples").is_number_unsigned()) throw ParseError(ParseErrorKind::Malformed, 0, "\"samples\" must be a positive integer");
    config.samples = doc.at("samples").get<std::size_t>();
  }
  if (doc.contains("k_grid")) {
    const auto& grid = doc.at("k_grid");
    if (!grid.is_array()) throw ParseError(ParseErrorKind::Malformed, 0, "\"k_grid\" must be an array");
    for (const auto& item : grid) {
      if (!item.is_string()) throw ParseError(ParseErrorKind::Malformed, 0, "k_grid entries must be strings");
      auto expr = KExpr::parse(item.get<std::string>());
      if (!expr) throw ParseError(ParseErrorKind::Malformed, 0, "bad k expression '" + item.get<std::string>() + "'");
      config.k_grid.push_back(*expr);
    }
  }
  return config;
}

}  // namespace betavote
