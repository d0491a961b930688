#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conical/entanglement.hpp"
#include "conical/sweep.hpp"
#include "conical/verification.hpp"

namespace conical::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kThreadsEnv = "CONICAL_HARVEST_THREADS";

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Command { Compute, Sweep, Dmax, Nuscan, Figure, Verify };
enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::Compute;
  Alignment alignment = Alignment::ParallelSameSide;
  double nu = 2.0;
  double gap = 0.1;
  double l = 0.1;
  double d = 0.5;
  SweepAxis axis = SweepAxis::D;
  double lo = 0.1;
  double hi = 1.0;
  int n = 50;
  Spacing spacing = Spacing::Linear;
  std::optional<double> d_over_l;
  NuObjective objective = NuObjective::CorrelationMinusResponse;
  DmaxScan scan;
  double tol = kProductionTolerance;
  int threads = 0;
  std::optional<std::string> out;
  std::optional<Format> format;
  VerifyProfile profile = VerifyProfile::Default;
  std::string figure;
};

/// Parses argv (argv[0] is the program name). A `--config FILE` supplies
/// defaults; command-line flags override it. Throws UsageError; returns
/// nullopt after printing help.
std::optional<RunConfig> parse(const std::vector<std::string>& args, std::ostream& out);

/// Thread count: explicit --threads, else CONICAL_HARVEST_THREADS, else 0.
int resolve_threads(std::optional<int> flag, const char* env_value);

/// Parses and runs; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ProductionPaths& paths = production_paths());

int run_compute(const RunConfig& config, std::ostream& out);
int run_sweep(const RunConfig& config, std::ostream& out);
int run_dmax(const RunConfig& config, std::ostream& out);
int run_nuscan(const RunConfig& config, std::ostream& out);
int run_figure(const RunConfig& config, std::ostream& out);
int run_verify(const RunConfig& config, const ProductionPaths& paths, std::ostream& out);

}  // namespace conical::cli
