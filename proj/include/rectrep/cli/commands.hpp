#pragma once

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rectrep::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,     // parse or validation error, bounds exceeded
  kExitDomain = 3,    // not rectangular / not faithful
  kExitMismatch = 4,  // verification found a counterexample
  kExitInternal = 5,  // internal invariant violated
};

struct CommandOptions {
  std::string algebra;
  std::string rep;
  std::optional<std::size_t> max_rank;
  std::optional<std::uint64_t> max_dim;
  std::optional<std::uint64_t> seed;
  bool dry_run = false;
  bool exhaustive = false;
  std::vector<std::string> exclude;  // catalogue kinds dropped by verify-catalogue
};

struct CommandResult {
  int exit_code = kExitOk;
  Json report;
  std::string table;  // human-readable summary
};

// char, rect, decompose, enumerate, verify-catalogue, verify-howe, census
const std::vector<std::string>& command_names();

// Never throws; every failure becomes an "error" object and an exit code.
// All integers in the report are decimal strings.
CommandResult run_command(const std::string& command, const CommandOptions& options);

}  // namespace rectrep::cli
