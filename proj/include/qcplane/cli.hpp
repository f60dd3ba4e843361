#pragma once

// Configuration-driven front end: `qcplane simulate|norm|bott|limit --config FILE`.
// Reports are JSON with sorted keys, so identical configs give identical bytes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcplane/algebra.hpp"
#include "qcplane/qnormal.hpp"

namespace qcplane::cli {

enum ExitCode : int { kSuccess = 0, kConfigurationError = 2, kVerificationFailure = 3 };

struct RunConfig {
  std::string q{"1/2"};
  std::vector<std::string> generators{"1"};
  std::string zero_mass{"0"};
  TruncationWindow window{-6, 6};
  std::vector<TruncationWindow> windows_sweep;
  double tolerance{1e-12};
  bool exact_mode{false};
  std::vector<std::vector<std::string>> elements;  // one list of "expr@k" terms per element
  std::vector<std::string> commands;                // sub-checks; empty means all
  std::vector<long> bott_orders{1, 2, 3};
  std::uint64_t seed{1};
  int random_pairs{20};
  bool perturb{false};
  std::optional<std::string> spectrum_csv;
  std::optional<std::string> matrix_csv;
};

/// Parses the JSON config text. Throws ConfigurationError or ParseError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

struct CommandResult {
  nlohmann::json report;
  int exit_code{kSuccess};
  std::vector<std::string> failed_checks;
};

CommandResult cmd_simulate(const RunConfig& config);
CommandResult cmd_norm(const RunConfig& config);
CommandResult cmd_bott(const RunConfig& config);
CommandResult cmd_limit(const RunConfig& config);

/// Element with up to max_modes modes in [-3, 3] and coefficients
/// (a0 + a1 t + a2 t^2) / (1 + c t^2) with small integers. When vanishing is
/// set, a0 = 0 for every mode k != 0.
AlgebraElement random_element(const DeformationParameter& q, std::mt19937_64& rng, int max_modes, bool vanishing);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcplane::cli
