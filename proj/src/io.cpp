#include "betavote/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "betavote/errors.hpp"

namespace betavote {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Comma-separated id list; an empty field yields an empty list.
std::vector<std::string> split_ids(std::string_view field, std::size_t line) {
  std::vector<std::string> ids;
  field = trim(field);
  if (field.empty()) return ids;
  for (auto part : split(field, ',')) {
    auto id = trim(part);
    if (id.empty()) throw ParseError(ParseErrorKind::Malformed, line, "empty candidate id in list");
    ids.emplace_back(id);
  }
  return ids;
}

constexpr std::string_view kHeaderPrefix = "#candidates:";

struct RawBallot {
  std::size_t line;
  std::vector<std::string> first;
  std::vector<std::string> approvals;
};

Election build_election(std::optional<std::vector<std::string>> header, const std::vector<RawBallot>& raw) {
  if (raw.empty()) throw ParseError(ParseErrorKind::EmptyInput, 0, "no ballots");

  std::vector<std::string> roster;
  if (header) {
    roster = *header;
  } else {
    // no header: columns follow order of first appearance
    auto note = [&roster](const std::string& id) {
      if (std::find(roster.begin(), roster.end(), id) == roster.end()) roster.push_back(id);
    };
    for (const auto& b : raw) {
      for (const auto& id : b.first) note(id);
      for (const auto& id : b.approvals) note(id);
    }
  }
  if (roster.empty()) throw ParseError(ParseErrorKind::EmptyInput, 0, "no candidates");

  std::optional<CandidateSet> candidates;
  try {
    candidates.emplace(roster);
  } catch (const DomainError& e) {
    throw ParseError(ParseErrorKind::DuplicateCandidate, 1, e.what());
  }

  auto lookup = [&candidates](const std::string& id, std::size_t line) {
    auto idx = candidates->find(id);
    if (!idx) throw ParseError(ParseErrorKind::UnknownCandidate, line, "'" + id + "'");
    return *idx;
  };

  std::vector<BallotPair> ballots;
  ballots.reserve(raw.size());
  for (const auto& b : raw) {
    if (b.first.size() != 1) {
      throw ParseError(ParseErrorKind::FirstChoiceCount, b.line,
                       "expected exactly one first choice, found " + std::to_string(b.first.size()));
    }
    auto first = lookup(b.first.front(), b.line);
    std::vector<CandidateIndex> approvals;
    approvals.reserve(b.approvals.size());
    for (const auto& id : b.approvals) approvals.push_back(lookup(id, b.line));
    if (std::find(approvals.begin(), approvals.end(), first) == approvals.end()) {
      throw ParseError(ParseErrorKind::InconsistentBallot, b.line,
                       "first choice '" + b.first.front() + "' is not approved");
    }
    ballots.emplace_back(first, std::move(approvals));
  }
  return Election(std::move(*candidates), std::move(ballots));
}

Election parse_csv(std::string_view bytes) {
  std::optional<std::vector<std::string>> header;
  std::vector<RawBallot> raw;
  std::size_t line_no = 0;
  for (auto line : split(bytes, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto content = trim(line);
    if (content.empty()) continue;
    if (content.substr(0, kHeaderPrefix.size()) == kHeaderPrefix) {
      if (header) throw ParseError(ParseErrorKind::Malformed, line_no, "repeated #candidates header");
      if (!raw.empty()) throw ParseError(ParseErrorKind::Malformed, line_no, "#candidates header after ballots");
      header = split_ids(content.substr(kHeaderPrefix.size()), line_no);
      if (header->empty()) throw ParseError(ParseErrorKind::EmptyInput, line_no, "empty #candidates header");
      continue;
    }
    if (content.front() == '#') continue;

    auto fields = split(content, ';');
    if (fields.size() != 2) {
      throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'first;approved,...'");
    }
    raw.push_back({line_no, split_ids(fields[0], line_no), split_ids(fields[1], line_no)});
  }
  return build_election(std::move(header), raw);
}

Json parse_json_document(std::string_view bytes) {
  if (trim(bytes).empty()) throw ParseError(ParseErrorKind::EmptyInput, 0, "empty document");
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw ParseError(ParseErrorKind::Malformed, 0, e.what());
  }
}

std::vector<std::string> string_list(const Json& node, const char* what, std::size_t line) {
  if (!node.is_array()) throw ParseError(ParseErrorKind::Malformed, line, std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) throw ParseError(ParseErrorKind::Malformed, line, std::string(what) + " must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

BallotFormat detect_format(std::string_view bytes) {
  auto t = trim(bytes);
  return !t.empty() && t.front() == '{' ? BallotFormat::Json : BallotFormat::Csv;
}

Election election_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError(ParseErrorKind::Malformed, 0, "top level must be an object");
  if (!doc.contains("candidates")) throw ParseError(ParseErrorKind::Malformed, 0, "missing \"candidates\"");
  if (!doc.contains("ballots")) throw ParseError(ParseErrorKind::Malformed, 0, "missing \"ballots\"");
  auto roster = string_list(doc.at("candidates"), "candidates", 0);
  if (roster.empty()) throw ParseError(ParseErrorKind::EmptyInput, 0, "no candidates");
  const auto& ballots = doc.at("ballots");
  if (!ballots.is_array()) throw ParseError(ParseErrorKind::Malformed, 0, "\"ballots\" must be an array");

  std::vector<RawBallot> raw;
  std::size_t pos = 0;
  for (const auto& b : ballots) {
    ++pos;
    if (!b.is_object()) throw ParseError(ParseErrorKind::Malformed, pos, "ballot must be an object");
    RawBallot r{pos, {}, {}};
    if (b.contains("first") && !b.at("first").is_null()) {
      const auto& first = b.at("first");
      if (first.is_string()) {
        r.first.push_back(first.get<std::string>());
      } else {
        r.first = string_list(first, "first", pos);
      }
    }
    if (b.contains("approve")) r.approvals = string_list(b.at("approve"), "approve", pos);
    raw.push_back(std::move(r));
  }
  return build_election(std::move(roster), raw);
}

Election parse_election(std::string_view bytes, BallotFormat format) {
  if (trim(bytes).empty()) throw ParseError(ParseErrorKind::EmptyInput, 0, "empty file");
  if (format == BallotFormat::Csv) return parse_csv(bytes);
  return election_from_json(parse_json_document(bytes));
}

Election parse_election(std::string_view bytes) { return parse_election(bytes, detect_format(bytes)); }

std::string write_election_csv(const Election& election) {
  const auto& cands = election.candidates();
  std::ostringstream out;
  out << kHeaderPrefix;
  for (std::size_t j = 0; j < cands.size(); ++j) out << (j ? "," : "") << cands.id(j);
  out << '\n';
  for (const auto& b : election.ballots()) {
    out << cands.id(b.first_choice()) << ';';
    bool first = true;
    for (auto j : b.approvals()) {
      out << (first ? "" : ",") << cands.id(j);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Json election_to_json(const Election& election) {
  const auto& cands = election.candidates();
  Json doc;
  doc["candidates"] = cands.ids();
  Json ballots = Json::array();
  for (const auto& b : election.ballots()) {
    Json approve = Json::array();
    for (auto j : b.approvals()) approve.push_back(cands.id(j));
    ballots.push_back(Json{{"first", cands.id(b.first_choice())}, {"approve", std::move(approve)}});
  }
  doc["ballots"] = std::move(ballots);
  return doc;
}

PreferenceProfile profile_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError(ParseErrorKind::Malformed, 0, "top level must be an object");
  if (!doc.contains("candidates") || !doc.contains("voters")) {
    throw ParseError(ParseErrorKind::Malformed, 0, "profile needs \"candidates\" and \"voters\"");
  }
  auto roster = string_list(doc.at("candidates"), "candidates", 0);
  if (roster.empty()) throw ParseError(ParseErrorKind::EmptyInput, 0, "no candidates");
  std::optional<CandidateSet> candidates;
  try {
    candidates.emplace(roster);
  } catch (const DomainError& e) {
    throw ParseError(ParseErrorKind::DuplicateCandidate, 0, e.what());
  }
  const auto& voters = doc.at("voters");
  if (!voters.is_array()) throw ParseError(ParseErrorKind::Malformed, 0, "\"voters\" must be an array");
  if (voters.empty()) throw ParseError(ParseErrorKind::EmptyInput, 0, "no voters");

  std::vector<VoterPreference> prefs;
  std::size_t pos = 0;
  for (const auto& v : voters) {
    ++pos;
    if (!v.is_object() || !v.contains("ranking")) {
      throw ParseError(ParseErrorKind::Malformed, pos, "voter needs a \"ranking\"");
    }
    VoterPreference pref;
    for (const auto& id : string_list(v.at("ranking"), "ranking", pos)) {
      auto idx = candidates->find(id);
      if (!idx) throw ParseError(ParseErrorKind::UnknownCandidate, pos, "'" + id + "'");
      pref.ranking.push_back(*idx);
    }
    if (v.contains("approve_top")) {
      const auto& t = v.at("approve_top");
      if (!t.is_number_unsigned()) throw ParseError(ParseErrorKind::Malformed, pos, "\"approve_top\" must be a positive integer");
      pref.approval_cutoff = t.get<std::size_t>();
    }
    prefs.push_back(std::move(pref));
  }
  try {
    return PreferenceProfile(std::move(*candidates), std::move(prefs));
  } catch (const DomainError& e) {
    throw ParseError(ParseErrorKind::Malformed, 0, e.what());
  }
}

PreferenceProfile parse_profile(std::string_view bytes) { return profile_from_json(parse_json_document(bytes)); }

Json profile_to_json(const PreferenceProfile& profile) {
  const auto& cands = profile.candidates();
  Json doc;
  doc["candidates"] = cands.ids();
  Json voters = Json::array();
  for (const auto& v : profile.voters()) {
    Json ranking = Json::array();
    for (auto j : v.ranking) ranking.push_back(cands.id(j));
    voters.push_back(Json{{"ranking", std::move(ranking)}, {"approve_top", v.approval_cutoff}});
  }
  doc["voters"] = std::move(voters);
  return doc;
}

bool looks_like_profile(std::string_view bytes) {
  if (detect_format(bytes) != BallotFormat::Json) return false;
  auto doc = Json::parse(bytes, nullptr, false);
  return doc.is_object() && doc.contains("voters") && doc.at("voters").is_array();
}

}  // namespace betavote
