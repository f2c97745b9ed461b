#ifndef CONEBB_CLI_HPP
#define CONEBB_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conebb/problems.hpp"
#include "conebb/solver.hpp"

namespace conebb::cli {

enum ExitCode : int {
  kConverged = 0,
  kIoError = 1,
  kMaxIterations = 2,
  kInfeasible = 3,
  kInvalidConfig = 4,
};

/// Bad flags, unknown names, or a cone that does not contain R^m_+.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string problem;
  std::string preset = "default";
  std::string cone = "poly";  // poly | icecream
  double epsilon = 0.0;
  std::vector<double> w;      // empty: (0.5, ..., 0.5)
  std::string theta;          // radians, or circumscribed | inscribed
  std::optional<double> tol_gap;
  std::optional<double> tol_width;
  std::uint64_t seed = 0;
  std::optional<int> population;
  std::optional<int> generations;
  bool normalize = true;
  std::optional<int> threads;  // falls back to CONEBB_THREADS
  std::filesystem::path out_dir = ".";
  int max_iterations = 200;
};

/// Parses `run` flags (program and subcommand names excluded). Throws ConfigError.
[[nodiscard]] RunConfig parse_run_args(const std::vector<std::string>& args);

/// Resolved problem, solver parameters, and a JSON echo of both.
struct ResolvedRun {
  problems::Preset preset;
  Problem problem;
  SolverParams params;
};

/// Builds the problem and validates the cone. Throws ConfigError.
[[nodiscard]] ResolvedRun resolve(const RunConfig& cfg);

/// Solves and writes result.json, trace.csv, front.csv into cfg.out_dir.
/// `out` receives the solver result when non-null.
int run(const RunConfig& cfg, SolveResult* out = nullptr);

/// Runs both configs into out_dir/a and out_dir/b and writes out_dir/compare.csv.
int compare(RunConfig a, RunConfig b, const std::filesystem::path& out_dir);

/// Entry point for the `conebb` executable.
int main(int argc, char** argv);

}  // namespace conebb::cli

#endif  // CONEBB_CLI_HPP
