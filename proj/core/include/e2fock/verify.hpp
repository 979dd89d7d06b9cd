#pragma once

// Batch verification: named suites expand a parameter grid into CheckReport
// records, computed (optionally in parallel) and returned in grid order.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "e2fock/identities.hpp"
#include "e2fock/report.hpp"

namespace e2fock {

/// Invalid suite/kind names, malformed grids, out-of-range dim. Maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable that replaces the default truncation 64.
inline constexpr const char* kDimEnvVar = "E2FOCK_DIM";

struct RunConfig {
  /// Explicit truncation; unset means E2FOCK_DIM or 64 (96 for the addition suite).
  std::optional<int> dim;
  /// Tolerance per record name, e.g. {"unitarity", 1e-9}.
  std::map<std::string, double> tol_overrides;
  /// Parameter lists keyed by flag name (k, lambda, r, psi, phi, x, y, m, zmax, sigma, ...).
  std::map<std::string, std::vector<double>> grid;
  Format format = Format::json;
  std::uint64_t seed = 12345;
  /// Worker threads for grid records; output order does not depend on it.
  int threads = 1;
};

/// dim from the config, else the environment, else `fallback`. Throws UsageError
/// outside [8, 512].
int effective_dim(const RunConfig& config, int fallback = 64);

const std::vector<std::string>& suite_names();

/// Throws UsageError for unknown suites or grids that cannot be parsed (for example a
/// non-integer k). Precondition violations of individual tuples become failing records.
std::vector<CheckReport> run_suite(const std::string& suite, const RunConfig& config);

/// Parses a flag value: "a..b" is the inclusive integer range, otherwise a comma list
/// of reals. Throws UsageError on malformed input or an empty range.
std::vector<double> parse_grid_values(const std::string& text);

/// Parses "name=value" for --tol. Throws UsageError.
std::pair<std::string, double> parse_tolerance(const std::string& text);

/// Runs the suite, streams the records and returns the exit code.
int run_verify(const std::string& suite, const RunConfig& config, std::ostream& out);

}  // namespace e2fock
