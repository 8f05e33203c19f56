#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "options.hpp"

namespace radialgeo::cli {

struct VerificationEntry {
  std::string id;
  std::string paper_ref;  // what is being checked, in words
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool expected_nonzero = false;  // negative control: passes when the residual exceeds the tolerance
  std::string notes;

  [[nodiscard]] bool pass() const;
};

struct VerificationReport {
  std::string version;
  std::uint64_t seed = 0;
  std::vector<VerificationEntry> entries;
  std::string started;  // ISO-8601, only when timestamps are requested
  std::string finished;

  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Runs the built-in invariant battery followed by cfg.extra_checks. Random
/// samples come from a generator seeded with cfg.seed. Malformed extra checks
/// raise ConfigError before any check runs.
VerificationReport run_verification(const RunConfig& cfg);

/// Writes the JSON report; returns 0 if every entry passes, 1 otherwise.
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace radialgeo::cli
