#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conical/correlation.hpp"
#include "conical/geometry.hpp"
#include "conical/quadrature.hpp"
#include "conical/response.hpp"

namespace conical {

struct Divergence {
  int image_index = 0;
  double argument = 0.0;
  std::string message;
};

/// Leading-order concurrence 2·max(0, |X| - √(P_A P_B)), all per λ².
/// When `diverged` is set, abs_x and concurrence are +∞.
struct ConcurrenceResult {
  double p_a = 0.0;
  double p_b = 0.0;
  double abs_x = 0.0;
  double geo_mean_p = 0.0;
  double concurrence = 0.0;
  bool diverged = false;
  std::optional<Divergence> divergence;
};

/// Full term-level evaluation of one configuration.
struct PairEvaluation {
  PairConfig config;
  double nu = 1.0;
  ResponsePair responses;
  std::optional<CorrelationBreakdown> correlation;  ///< empty when diverged
  ConcurrenceResult result;
};

/// Throws DivergentOverlap when X diverges.
ConcurrenceResult concurrence(const PairConfig& config, const ConeParameter& nu,
                              double tol = kProductionTolerance);

/// Like concurrence, but divergences come back flagged instead of thrown.
PairEvaluation evaluate_pair(const PairConfig& config, const ConeParameter& nu,
                             double tol = kProductionTolerance);

/// |X| - √(P_A P_B); concurrence is positive exactly where this is.
double harvesting_margin(const PairConfig& config, const ConeParameter& nu,
                         double tol = kProductionTolerance);

/// Closed-form Minkowski concurrence
///   max{ exp(-g²)/(2√π) [ (1/d) exp(-d²/4) |erfc(id/2)| + g erfcx(g) - 1/√π ], 0 }.
double concurrence_flat(double d, double gap);

struct DmaxScan {
  double d_hi = 12.0;
  int grid_n = 512;
  double tol = 1e-6;
  int threads = 0;  ///< 0: OpenMP default
};

struct DmaxResult {
  double d_max = 0.0;
  bool at_upper_bound = false;         ///< concurrence still positive at d_hi
  std::vector<double> divergent_points;  ///< scan points skipped as divergent
};

/// Largest d ≤ d_hi with positive concurrence: grid scan of the margin, then
/// Brent on the last sign change. Opposite-sides scans start at d = 2l.
/// Empty when the margin is never positive on the grid.
std::optional<DmaxResult> d_max(Alignment alignment, const ConeParameter& nu, double l,
                                double gap, const DmaxScan& scan = {});

/// Single-threaded reference for d_max.
std::optional<DmaxResult> d_max_serial(Alignment alignment, const ConeParameter& nu, double l,
                                       double gap, const DmaxScan& scan = {});

/// Opposite-sides alignment: the distance l₀ beyond which even the closest
/// admissible pair (d = 2l) harvests nothing, i.e. where d_max(l) meets 2l.
double opposite_terminal_distance(const ConeParameter& nu, double gap, Bracket l_range,
                                  double tol = 1e-8);

enum class NuObjective {
  CorrelationMinusResponse,  ///< minimize |X| - √(P_A P_B)
  Concurrence,               ///< maximize concurrence
};

/// ν in `bracket` extremizing the selected objective for a fixed geometry.
double nu_extremum(NuObjective objective, const PairConfig& config, Bracket bracket,
                   double tol = 1e-6);

/// ν minimizing an arbitrary objective.
double nu_extremum(const std::function<double(const ConeParameter&)>& objective,
                   Bracket bracket, double tol = 1e-6);

}  // namespace conical
