#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rm3/exact_matrix.hpp"
#include "rm3/walker.hpp"

namespace rm3::experiment {

inline constexpr const char* kArtifactVersion = "0.1.0";

enum class Command { torsion_stats, modp_rank, heegaard, lyapunov, prescribe, punctured, snf };

std::string to_string(Command c);
Command command_from_string(const std::string& s);

struct ExperimentConfig {
  Command command = Command::torsion_stats;
  BatchConfig batch;

  std::vector<std::uint64_t> primes;  // modp-rank
  std::size_t steps = 2000;           // lyapunov
  std::size_t trials = 100;           // lyapunov
  std::string chain;                  // prescribe
  std::size_t alphabet = 2;           // punctured
  bool pow2 = false;                  // punctured: lengths are exponents of 2
  std::optional<IntMatrix> matrix;    // snf
  bool identity_smoke = true;         // heegaard: emit the identity-gluing row
};

/// Defaults for a command before any fields are applied.
ExperimentConfig default_config(Command c);

/// Reads a config document; a manifest is accepted too (its "config" member is used).
/// Throws ConfigError for missing or malformed fields, IoError for unreadable files
/// referenced by "family_file" / "matrix_file".
ExperimentConfig config_from_json(const nlohmann::json& doc);

/// Canonical, self-contained serialization (custom matrices inlined).
nlohmann::json config_to_json(const ExperimentConfig& config);

struct ExperimentOutput {
  std::string csv;
  nlohmann::json manifest;
};

/// Runs the command. Throws ConfigError for invalid configurations and
/// InvariantError when an internal consistency check fails.
ExperimentOutput run_experiment(const ExperimentConfig& config);

/// Writes <prefix>.csv and <prefix>.json; throws IoError.
void write_outputs(const ExperimentOutput& out, const std::string& prefix);

/// 17 significant digits, general notation, locale independent.
std::string format_real(double v);

}  // namespace rm3::experiment
