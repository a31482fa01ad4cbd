#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "betavote/io.hpp"

namespace betavote {

inline constexpr const char* kVersion = "0.1.0";

// Stable exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitFalsified = 1,
  kExitInputError = 2,
  kExitDomainError = 3,
};

// Provenance block embedded in every output. Everything but the timestamp is
// a function of the invocation, so reruns differ only there.
struct RunManifest {
  std::string command;
  std::string input_digest;  // "sha256:<hex>"
  std::optional<std::uint64_t> seed;
  std::string version = kVersion;
  std::string timestamp;  // UTC, ISO 8601

  Json to_json() const;
};

std::string sha256_hex(std::string_view bytes);
std::string utc_timestamp();

// Runs one CLI invocation (args exclude the program name) and returns the exit
// code. Output goes to `out` unless --output names a file.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace betavote
