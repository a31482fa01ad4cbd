#include "betavote/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "betavote/criteria.hpp"
#include "betavote/errors.hpp"
#include "betavote/kanalysis.hpp"
#include "betavote/report.hpp"
#include "betavote/simulate.hpp"
#include "betavote/tally.hpp"

namespace betavote {

Json RunManifest::to_json() const {
  Json doc;
  doc["command"] = command;
  doc["input_digest"] = input_digest;
  doc["seed"] = seed ? Json(*seed) : Json(nullptr);
  doc["version"] = version;
  doc["timestamp"] = timestamp;
  return doc;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

namespace {

enum class Format { Json, Tsv };

// Thrown inside a command to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitInputError, "cannot read '" + path + "'"};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Rational require_k(const std::optional<std::string>& text, const char* why) {
  if (!text) throw Exit{kExitInputError, std::string("--k is required ") + why};
  auto k = parse_rational(*text);
  if (!k) throw Exit{kExitInputError, "--k '" + *text + "' is not a rational number"};
  if (*k < 1) throw Exit{kExitDomainError, "k must be >= 1, got " + to_string(*k)};
  return *k;
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed, const char* command) {
  if (!seed) throw Exit{kExitDomainError, std::string(command) + " is randomized and needs an explicit --seed"};
  return *seed;
}

// Manifest + payload, written as one JSON document or as "# key: value"
// comment lines followed by the TSV payload.
struct Emitter {
  RunManifest manifest;
  Format format = Format::Json;
  std::string output_path;
  std::ostream* out = nullptr;

  void emit_json(const Json& payload) const {
    Json doc;
    doc["manifest"] = manifest.to_json();
    doc["payload"] = payload;
    write(doc.dump(2) + "\n");
  }

  void emit_tsv(const std::string& payload) const {
    std::ostringstream doc;
    doc << "# command: " << manifest.command << '\n';
    doc << "# input_digest: " << manifest.input_digest << '\n';
    doc << "# seed: " << (manifest.seed ? std::to_string(*manifest.seed) : std::string("none")) << '\n';
    doc << "# version: " << manifest.version << '\n';
    doc << "# timestamp: " << manifest.timestamp << '\n';
    doc << payload;
    write(doc.str());
  }

  void write(const std::string& text) const {
    if (output_path.empty()) {
      *out << text;
      return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw Exit{kExitInputError, "cannot write '" + output_path + "'"};
    file << text;
  }
};

struct Loaded {
  std::optional<Election> election;
  std::optional<PreferenceProfile> profile;
  std::optional<Rational> k;  // from a replayed witness
};

// A ballot file, a preference profile, or a verdict/search output whose
// embedded witness is replayed.
Loaded load_input(const std::string& bytes) {
  Loaded loaded;
  if (detect_format(bytes) == BallotFormat::Json) {
    auto doc = Json::parse(bytes, nullptr, false);
    const Json* found = nullptr;
    if (doc.is_object() && doc.contains("payload")) {
      const auto& payload = doc["payload"];
      if (payload.contains("witness")) found = &payload["witness"];
      else if (payload.contains("search") && payload["search"].contains("witness")) found = &payload["search"]["witness"];
    }
    if (found) {
      const auto& witness = *found;
      if (witness.contains("k") && witness["k"].is_string()) loaded.k = parse_rational(witness["k"].get<std::string>());
      if (witness.contains("profile")) loaded.profile = profile_from_json(witness["profile"]);
      if (witness.contains("election")) loaded.election = election_from_json(witness["election"]);
      if (!loaded.profile && !loaded.election) throw ParseError(ParseErrorKind::Malformed, 0, "witness carries no election");
      if (!loaded.election) loaded.election = honest_ballots(*loaded.profile);
      return loaded;
    }
    if (looks_like_profile(bytes)) {
      loaded.profile = parse_profile(bytes);
      loaded.election = honest_ballots(*loaded.profile);
      return loaded;
    }
  }
  loaded.election = parse_election(bytes);
  return loaded;
}

std::string joined(const std::vector<std::string>& args) {
  std::string out = "betavote";
  for (const auto& a : args) out += " " + a;
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plurality, approval and beta(k) election analysis", "betavote"};
  app.require_subcommand(1);

  std::string input_path;
  std::string rule_name;
  std::optional<std::string> k_text;
  std::optional<std::uint64_t> seed;
  std::string format_name = "json";
  std::string criterion_name;
  std::string target_name;
  std::string output_path;
  std::size_t trials = 1000;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", input_path, "Input file")->required();
    cmd->add_option("--format", format_name, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_option("-o,--output", output_path, "Write to this file instead of standard output");
  };

  auto* tally = app.add_subcommand("tally", "Score a ballot file under one rule");
  add_common(tally);
  tally->add_option("--rule", rule_name, "plurality, approval or beta")
      ->required()
      ->check(CLI::IsMember({"plurality", "approval", "beta"}));
  tally->add_option("--k", k_text, "First-choice weight (rational, beta only)");

  auto* intervals = app.add_subcommand("intervals", "Winning k-intervals for every candidate");
  add_common(intervals);

  auto* check = app.add_subcommand("check", "Check a voting criterion on a ballot file or profile");
  add_common(check);
  check->add_option("--criterion", criterion_name, "pareto, monotonicity, unanimous_winner or non_dictatorship")
      ->required();
  check->add_option("--k", k_text, "First-choice weight (rational)");
  check->add_option("--seed", seed, "Seed for randomized checks");
  check->add_option("--trials", trials, "Random perturbations for the monotonicity check");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo agreement statistics");
  add_common(simulate);
  simulate->add_option("--seed", seed, "Run seed");
  simulate->add_option("--threads", threads, "Worker threads (0 = BETAVOTE_THREADS or all cores)");

  auto* search = app.add_subcommand("search", "Search random profiles for a counterexample");
  add_common(search);
  search->add_option("--target", target_name, "approval_non_pareto, beta_non_pareto or conjecture_probe")->required();
  search->add_option("--seed", seed, "Run seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  Emitter emit;
  emit.out = &out;
  emit.output_path = output_path;
  emit.format = format_name == "tsv" ? Format::Tsv : Format::Json;
  emit.manifest.command = joined(args);
  emit.manifest.timestamp = utc_timestamp();

  try {
    // seeds are checked before any input is read
    if (simulate->parsed()) require_seed(seed, "simulate");
    if (search->parsed()) require_seed(seed, "search");
    if (check->parsed() && parse_criterion(criterion_name) == Criterion::Monotonicity) {
      require_seed(seed, "the monotonicity check");
    }
    emit.manifest.seed = seed;

    const auto bytes = read_file(input_path);
    emit.manifest.input_digest = "sha256:" + sha256_hex(bytes);

    if (tally->parsed()) {
      auto election = parse_election(bytes);
      auto rule = *parse_rule(rule_name);
      ScoreVector scores;
      if (rule == Rule::Beta) {
        scores = beta_score(election, require_k(k_text, "for --rule beta"));
      } else {
        if (k_text) throw Exit{kExitInputError, "--k only applies to --rule beta"};
        scores = score(election, rule);
      }
      if (emit.format == Format::Tsv) {
        std::ostringstream tsv;
        auto ws = winners(scores);
        tsv << "candidate\tscore\tscore_decimal\twinner\n";
        for (std::size_t j = 0; j < scores.values.size(); ++j) {
          tsv << election.candidates().id(j) << '\t' << to_string(scores.values[j]) << '\t'
              << to_double(scores.values[j]) << '\t' << (ws.contains(j) ? 1 : 0) << '\n';
        }
        emit.emit_tsv(tsv.str());
      } else {
        emit.emit_json(score_report(election.candidates(), scores));
      }
      return kExitOk;
    }

    if (intervals->parsed()) {
      auto election = parse_election(bytes);
      auto report = potential_winners(election);
      if (emit.format == Format::Tsv) {
        emit.emit_tsv(breakpoint_tsv(election.candidates(), report));
      } else {
        emit.emit_json(envelope_report(election.candidates(), report));
      }
      return kExitOk;
    }

    if (check->parsed()) {
      auto criterion = parse_criterion(criterion_name);
      if (!criterion) throw Exit{kExitInputError, "unknown criterion '" + criterion_name + "'"};
      auto input = load_input(bytes);
      const auto& election = *input.election;
      auto weight = [&](const char* why) {
        if (!k_text && input.k) return *input.k;
        return require_k(k_text, why);
      };
      CriterionVerdict verdict;
      switch (*criterion) {
        case Criterion::Pareto:
          if (!input.profile) {
            throw Exit{kExitInputError, "the pareto check needs a preference profile (rankings), not bare ballots"};
          }
          verdict = check_pareto(*input.profile, weight("for the pareto check"));
          break;
        case Criterion::Monotonicity:
          verdict = check_monotonicity(election, weight("for the monotonicity check"), trials, *seed);
          break;
        case Criterion::UnanimousWinner:
          verdict = check_unanimous_winner(election, weight("for the unanimous winner check"));
          break;
        case Criterion::NonDictatorship: {
          std::vector<Rational> weights;
          if (k_text) weights.push_back(require_k(k_text, ""));
          const auto& ballots = election.ballots();
          verdict = dictatorship_probe(election.candidate_count(), election.voter_count(),
                                       [&ballots](std::size_t v) { return ballots[v].first_choice(); }, weights);
          break;
        }
      }
      if (emit.format == Format::Tsv) throw Exit{kExitInputError, "check only writes json"};
      emit.emit_json(verdict_report(verdict, election.candidates()));
      return verdict.holds ? kExitOk : kExitFalsified;
    }

    if (simulate->parsed() || search->parsed()) {
      auto config = parse_sim_config(bytes);
      config.seed = *seed;
      config.validate();
      if (simulate->parsed()) {
        auto stats = run_agreement(config, threads);
        if (emit.format == Format::Tsv) {
          emit.emit_tsv(stats_tsv(stats));
        } else {
          emit.emit_json(Json{{"config", config_report(config)}, {"stats", stats_report(stats)}});
        }
        return kExitOk;
      }
      auto target = parse_search_target(target_name);
      if (!target) throw Exit{kExitInputError, "unknown search target '" + target_name + "'"};
      if (emit.format == Format::Tsv) throw Exit{kExitInputError, "search only writes json"};
      auto result = search_counterexample(*target, config);
      emit.emit_json(Json{{"config", config_report(config)}, {"search", search_report(*target, result)}});
      return result ? kExitFalsified : kExitOk;
    }
  } catch (const Exit& e) {
    err << "betavote: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    err << "betavote: " << input_path << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const DomainError& e) {
    err << "betavote: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitInputError;
}

}  // namespace betavote
