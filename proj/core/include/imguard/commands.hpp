#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "imguard/optimizer.hpp"

namespace imguard {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

/// Flat configuration for the CLI: protection hyperparameters plus paths
/// and the objective/purifier selections. Populated from a key=value file
/// and/or command-line flags (flags win).
struct RunConfig {
  std::string input;      // source image (protect, purify, spectrum) or protected image (eval)
  std::string original;   // clean reference image (eval)
  std::string masks;      // directory of mask PNGs, lexicographic order; empty = single region
  std::string output;     // output PNG
  std::string report;     // JSON report path
  std::string csv;        // CSV output path (eval, spectrum)

  std::string objective = "ref_encoder";  // ref_encoder | pool
  std::uint64_t objective_seed = 0;
  int pool_block = 8;

  std::string op;       // purifier spec for `purify`
  std::string battery;  // ';'-separated purifier specs for `eval`; empty = default battery

  ProtectConfig protect;
  bool timing = false;  // include wall time in the report (off: reports are run-to-run identical)
};

/// Applies one `key=value` pair. Unknown keys throw domain_error; epsilon
/// accepts fractions like 16/255.
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

/// Loads a flat key=value UTF-8 config file ('#' comments, blank lines ok).
RunConfig load_config_file(const std::string& path);

/// Subcommand bodies. Errors print one line to stderr naming the failing
/// stage and return kExitUsage for bad user input, kExitInternal otherwise.
int cmd_protect(const RunConfig& cfg);
int cmd_purify(const RunConfig& cfg);
int cmd_eval(const RunConfig& cfg);
int cmd_spectrum(const RunConfig& cfg);

}  // namespace imguard
