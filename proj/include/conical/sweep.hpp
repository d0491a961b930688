#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "conical/entanglement.hpp"

namespace conical {

enum class SweepAxis { D, L, Nu, Gap };

std::string_view to_string(SweepAxis axis);
std::optional<SweepAxis> parse_sweep_axis(std::string_view name);

enum class Spacing { Linear, Log };

struct SweepSpec {
  SweepAxis axis = SweepAxis::D;
  double lo = 0.1;
  double hi = 1.0;
  int n = 50;
  Spacing spacing = Spacing::Linear;
  std::vector<Alignment> alignments{Alignment::ParallelSameSide};
  double l = 0.1;
  double d = 0.5;
  double gap = 0.1;
  double nu = 2.0;
  /// When set, d follows l as d = d_over_l · l (l sweeps only).
  std::optional<double> d_over_l;
  double tol = kProductionTolerance;
};

enum class RowStatus { Ok, Diverged, QuadratureFailure };

struct SweepRow {
  double param = 0.0;
  double p_a = 0.0;
  double p_b = 0.0;
  double abs_x = 0.0;
  double concurrence = 0.0;
  RowStatus status = RowStatus::Ok;

  bool diverged() const { return status == RowStatus::Diverged; }
};

struct SweepTable {
  Alignment alignment;
  std::vector<SweepRow> rows;
};

/// Grid values of the swept parameter, in order.
std::vector<double> sweep_values(const SweepSpec& spec);

/// Configuration and cone parameter of row `value` of a sweep.
PairConfig sweep_config(const SweepSpec& spec, Alignment alignment, double value);
ConeParameter sweep_nu(const SweepSpec& spec, double value);

/// Validates every grid point up front (throws InvalidParameter), then
/// evaluates rows on OpenMP threads (0 = runtime default). Divergent
/// overlaps and quadrature failures are recorded per row. The result is
/// identical to sweep_serial for any thread count.
std::vector<SweepTable> sweep(const SweepSpec& spec, int threads = 0);

std::vector<SweepTable> sweep_serial(const SweepSpec& spec);

}  // namespace conical
