#include "conical/entanglement.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "conical/errors.hpp"
#include "conical/parallel.hpp"
#include "conical/special_functions.hpp"

namespace conical {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ConcurrenceResult assemble(const ResponsePair& responses, Complex x) {
  ConcurrenceResult r;
  r.p_a = responses.a.total;
  r.p_b = responses.b.total;
  r.abs_x = std::abs(x);
  r.geo_mean_p = std::sqrt(std::max(r.p_a, 0.0) * std::max(r.p_b, 0.0));
  r.concurrence = 2.0 * std::max(0.0, r.abs_x - r.geo_mean_p);
  return r;
}

// One margin sample on the d_max grid.
struct ScanPoint {
  double d = 0.0;
  double margin = 0.0;
  bool diverged = false;
};

std::vector<double> scan_grid(Alignment alignment, double l, const DmaxScan& scan) {
  if (scan.grid_n < 2) throw InvalidParameter("d_max: grid_n must be >= 2");
  if (!(scan.tol > 0.0)) throw InvalidParameter("d_max: tol must be > 0");
  std::vector<double> grid(static_cast<std::size_t>(scan.grid_n));
  const double n = static_cast<double>(scan.grid_n);
  if (alignment == Alignment::OrthogonalOppositeSides) {
    const double lo = 2.0 * l;
    if (!(scan.d_hi > lo)) throw InvalidParameter("d_max: d_hi must exceed 2l for opposite sides");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      grid[i] = lo + (scan.d_hi - lo) * static_cast<double>(i) / (n - 1.0);
    }
  } else {
    if (!(scan.d_hi > 0.0)) throw InvalidParameter("d_max: d_hi must be > 0");
    for (std::size_t i = 0; i < grid.size(); ++i) {
      grid[i] = scan.d_hi * static_cast<double>(i + 1) / n;
    }
  }
  return grid;
}

ScanPoint sample(Alignment alignment, const ConeParameter& nu, double l, double gap, double d) {
  ScanPoint p;
  p.d = d;
  try {
    p.margin = harvesting_margin({alignment, l, d, gap}, nu);
  } catch (const DivergentOverlap&) {
    p.diverged = true;
  }
  return p;
}

std::optional<DmaxResult> locate(const std::vector<ScanPoint>& points, Alignment alignment,
                                 const ConeParameter& nu, double l, double gap,
                                 const DmaxScan& scan) {
  DmaxResult out;
  std::ptrdiff_t last_positive = -1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].diverged) {
      out.divergent_points.push_back(points[i].d);
    } else if (points[i].margin > 0.0) {
      last_positive = static_cast<std::ptrdiff_t>(i);
    }
  }
  if (last_positive < 0) return std::nullopt;

  std::size_t next = static_cast<std::size_t>(last_positive) + 1;
  while (next < points.size() && points[next].diverged) ++next;
  if (next >= points.size()) {
    out.d_max = points[static_cast<std::size_t>(last_positive)].d;
    out.at_upper_bound = static_cast<std::size_t>(last_positive) + 1 == points.size();
    return out;
  }

  const Bracket bracket(points[static_cast<std::size_t>(last_positive)].d, points[next].d);
  out.d_max = find_root_bracketed(
      [&](double d) { return harvesting_margin({alignment, l, d, gap}, nu); }, bracket,
      scan.tol);
  return out;
}

}  // namespace

ConcurrenceResult concurrence(const PairConfig& config, const ConeParameter& nu, double tol) {
  const auto responses = detector_responses(config, nu, tol);
  const auto x = correlation(config, nu, tol);
  return assemble(responses, x.total);
}

PairEvaluation evaluate_pair(const PairConfig& config, const ConeParameter& nu, double tol) {
  PairEvaluation ev;
  ev.config = config;
  ev.nu = nu.nu();
  ev.responses = detector_responses(config, nu, tol);
  try {
    ev.correlation = correlation(config, nu, tol);
    ev.result = assemble(ev.responses, ev.correlation->total);
  } catch (const DivergentOverlap& e) {
    ev.result = assemble(ev.responses, Complex{});
    ev.result.abs_x = kInf;
    ev.result.concurrence = kInf;
    ev.result.diverged = true;
    ev.result.divergence = Divergence{e.image_index(), e.argument(), e.what()};
  }
  return ev;
}

double harvesting_margin(const PairConfig& config, const ConeParameter& nu, double tol) {
  const auto r = concurrence(config, nu, tol);
  return r.abs_x - r.geo_mean_p;
}

double concurrence_flat(double d, double gap) {
  if (!(d > 0.0) || gap < 0.0) throw InvalidParameter("concurrence_flat: need d > 0, gap >= 0");
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  // exp(-d²/4)|erfc(id/2)| = |w(d/2)|, which stays finite for any d.
  const double overlap = std::abs(faddeeva_w(Complex(0.5 * d, 0.0))) / d;
  const double value =
      std::exp(-gap * gap) / (2.0 * sqrt_pi) * (overlap + gap * erfcx(gap) - 1.0 / sqrt_pi);
  return std::max(value, 0.0);
}

std::optional<DmaxResult> d_max(Alignment alignment, const ConeParameter& nu, double l,
                                double gap, const DmaxScan& scan) {
  const auto grid = scan_grid(alignment, l, scan);
  std::vector<ScanPoint> points(grid.size());
  // Validation errors surface before the parallel region.
  PairConfig{alignment, l, grid.back(), gap}.validate();
  parallel::for_each_index(grid.size(), scan.threads,
                           [&](std::size_t i) { points[i] = sample(alignment, nu, l, gap, grid[i]); });
  return locate(points, alignment, nu, l, gap, scan);
}

std::optional<DmaxResult> d_max_serial(Alignment alignment, const ConeParameter& nu, double l,
                                       double gap, const DmaxScan& scan) {
  const auto grid = scan_grid(alignment, l, scan);
  std::vector<ScanPoint> points;
  points.reserve(grid.size());
  for (double d : grid) points.push_back(sample(alignment, nu, l, gap, d));
  return locate(points, alignment, nu, l, gap, scan);
}

double opposite_terminal_distance(const ConeParameter& nu, double gap, Bracket l_range,
                                  double tol) {
  if (!(l_range.lo > 0.0)) throw InvalidParameter("opposite_terminal_distance: l range must be > 0");
  auto margin = [&](double l) {
    return harvesting_margin({Alignment::OrthogonalOppositeSides, l, 2.0 * l, gap}, nu);
  };
  constexpr int kSamples = 64;
  double prev_l = l_range.lo;
  double prev = margin(prev_l);
  std::optional<Bracket> last;
  for (int i = 1; i <= kSamples; ++i) {
    const double l = l_range.lo + l_range.width() * i / kSamples;
    const double m = margin(l);
    if (prev > 0.0 && m <= 0.0) last.emplace(prev_l, l);
    prev_l = l;
    prev = m;
  }
  if (!last) {
    std::ostringstream msg;
    msg << "opposite_terminal_distance: no positive-to-negative crossing in [" << l_range.lo
        << ", " << l_range.hi << "]";
    throw NoSignChange(msg.str());
  }
  return find_root_bracketed(margin, *last, tol);
}

double nu_extremum(const std::function<double(const ConeParameter&)>& objective,
                   Bracket bracket, double tol) {
  if (bracket.lo < ConeParameter::kMin || bracket.hi > ConeParameter::kMax) {
    throw InvalidParameter("nu_extremum: bracket must lie within [1, 64]");
  }
  return minimize_scalar([&](double nu) { return objective(ConeParameter(nu)); }, bracket, tol);
}

double nu_extremum(NuObjective objective, const PairConfig& config, Bracket bracket, double tol) {
  config.validate();
  if (objective == NuObjective::Concurrence) {
    return nu_extremum(
        [&](const ConeParameter& nu) { return -concurrence(config, nu).concurrence; }, bracket,
        tol);
  }
  return nu_extremum([&](const ConeParameter& nu) { return harvesting_margin(config, nu); },
                     bracket, tol);
}

}  // namespace conical
