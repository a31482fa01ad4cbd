#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "betavote/ballots.hpp"

namespace betavote {

using Json = nlohmann::ordered_json;

enum class BallotFormat { Csv, Json };

// JSON when the first non-blank byte is '{', CSV otherwise.
BallotFormat detect_format(std::string_view bytes);

// Throws ParseError. Row order is preserved.
Election parse_election(std::string_view bytes, BallotFormat format);
Election parse_election(std::string_view bytes);

std::string write_election_csv(const Election& election);
Json election_to_json(const Election& election);
Election election_from_json(const Json& doc);

// {"candidates":[...],"voters":[{"ranking":[...],"approve_top":t}]}
PreferenceProfile parse_profile(std::string_view bytes);
Json profile_to_json(const PreferenceProfile& profile);
PreferenceProfile profile_from_json(const Json& doc);

// True when the document is a JSON object carrying a "voters" array.
bool looks_like_profile(std::string_view bytes);

}  // namespace betavote
