#include "conical/sweep.hpp"

#include <cmath>
#include <limits>

#include "conical/errors.hpp"
#include "conical/parallel.hpp"

namespace conical {

namespace {

SweepRow evaluate_row(const SweepSpec& spec, Alignment alignment, double value) {
  SweepRow row;
  row.param = value;
  try {
    const auto ev = evaluate_pair(sweep_config(spec, alignment, value), sweep_nu(spec, value),
                                  spec.tol);
    row.p_a = ev.result.p_a;
    row.p_b = ev.result.p_b;
    row.abs_x = ev.result.abs_x;
    row.concurrence = ev.result.concurrence;
    row.status = ev.result.diverged ? RowStatus::Diverged : RowStatus::Ok;
  } catch (const ToleranceNotMet&) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    row.p_a = row.p_b = row.abs_x = row.concurrence = kInf;
    row.status = RowStatus::QuadratureFailure;
  }
  return row;
}

void validate_grid(const SweepSpec& spec, const std::vector<double>& values) {
  for (Alignment a : spec.alignments) {
    for (double v : values) {
      sweep_config(spec, a, v).validate();
      (void)sweep_nu(spec, v);
    }
  }
}

}  // namespace

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::D: return "d";
    case SweepAxis::L: return "l";
    case SweepAxis::Nu: return "nu";
    case SweepAxis::Gap: return "gap";
  }
  return "unknown";
}

std::optional<SweepAxis> parse_sweep_axis(std::string_view name) {
  if (name == "d") return SweepAxis::D;
  if (name == "l") return SweepAxis::L;
  if (name == "nu") return SweepAxis::Nu;
  if (name == "gap") return SweepAxis::Gap;
  return std::nullopt;
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  if (spec.n < 1) throw InvalidParameter("sweep: n must be >= 1");
  if (!std::isfinite(spec.lo) || !std::isfinite(spec.hi) || spec.hi < spec.lo) {
    throw InvalidParameter("sweep: need finite lo <= hi");
  }
  if (spec.spacing == Spacing::Log && !(spec.lo > 0.0)) {
    throw InvalidParameter("sweep: log spacing needs lo > 0");
  }
  if (spec.d_over_l && spec.axis != SweepAxis::L) {
    throw InvalidParameter("sweep: d_over_l only applies to l sweeps");
  }
  std::vector<double> values(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) {
    const double t = spec.n == 1 ? 0.0 : static_cast<double>(i) / (spec.n - 1);
    values[static_cast<std::size_t>(i)] =
        spec.spacing == Spacing::Log
            ? std::exp(std::log(spec.lo) + t * (std::log(spec.hi) - std::log(spec.lo)))
            : spec.lo + t * (spec.hi - spec.lo);
  }
  values.back() = spec.n == 1 ? spec.lo : spec.hi;
  return values;
}

PairConfig sweep_config(const SweepSpec& spec, Alignment alignment, double value) {
  PairConfig c{alignment, spec.l, spec.d, spec.gap};
  switch (spec.axis) {
    case SweepAxis::D: c.d = value; break;
    case SweepAxis::L:
      c.l = value;
      if (spec.d_over_l) c.d = *spec.d_over_l * value;
      break;
    case SweepAxis::Gap: c.gap = value; break;
    case SweepAxis::Nu: break;
  }
  return c;
}

ConeParameter sweep_nu(const SweepSpec& spec, double value) {
  return ConeParameter(spec.axis == SweepAxis::Nu ? value : spec.nu);
}

std::vector<SweepTable> sweep(const SweepSpec& spec, int threads) {
  const auto values = sweep_values(spec);
  validate_grid(spec, values);
  std::vector<SweepTable> tables;
  for (Alignment a : spec.alignments) tables.push_back({a, std::vector<SweepRow>(values.size())});
  const std::size_t per_table = values.size();
  parallel::for_each_index(per_table * tables.size(), threads, [&](std::size_t k) {
    const std::size_t t = k / per_table;
    const std::size_t i = k % per_table;
    tables[t].rows[i] = evaluate_row(spec, tables[t].alignment, values[i]);
  });
  return tables;
}

std::vector<SweepTable> sweep_serial(const SweepSpec& spec) {
  const auto values = sweep_values(spec);
  validate_grid(spec, values);
  std::vector<SweepTable> tables;
  for (Alignment a : spec.alignments) {
    SweepTable table{a, {}};
    table.rows.reserve(values.size());
    for (double v : values) table.rows.push_back(evaluate_row(spec, a, v));
    tables.push_back(std::move(table));
  }
  return tables;
}

}  // namespace conical
