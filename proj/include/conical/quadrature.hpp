#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "conical/special_functions.hpp"

namespace conical {

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<Complex(double)>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Real and imaginary parts integrated on a shared set of subintervals.
struct ComplexQuadratureResult {
  QuadratureResult real;
  QuadratureResult imag;

  Complex value() const { return {real.value, imag.value}; }
};

/// Closed interval [lo, hi] with lo < hi.
struct Bracket {
  double lo;
  double hi;

  Bracket(double lo_, double hi_);
  double width() const { return hi - lo; }
};

inline constexpr double kProductionTolerance = 1e-10;
inline constexpr double kOracleTolerance = 1e-8;
inline constexpr std::size_t kDefaultMaxSubdivisions = 4000;

/// Adaptive 15-point Gauss-Kronrod on [lo, hi]. `breakpoints` inside the
/// interval seed the initial partition. Throws ToleranceNotMet when the
/// subdivision budget is exhausted.
QuadratureResult integrate(const RealFn& f, Bracket range, double tol,
                           std::span<const double> breakpoints = {},
                           std::size_t max_subdivisions = kDefaultMaxSubdivisions);

/// Truncation point for an integrand bounded by exp(-tail_rate (x - lower)):
/// at least lower + (ln(1/tol) + 5) / tail_rate, and far enough that the
/// analytic tail bound is below tol / 100.
double semi_infinite_cutoff(double tail_rate, double tol, double lower = 0.0);

/// ∫_lower^∞ f, for f decaying at least like exp(-tail_rate x). The returned
/// error estimate includes the analytic tail bound.
QuadratureResult integrate_semi_infinite(const RealFn& f, double tail_rate,
                                         double tol, double lower = 0.0,
                                         std::span<const double> breakpoints = {});

ComplexQuadratureResult integrate_semi_infinite_complex(
    const ComplexFn& f, double tail_rate, double tol, double lower = 0.0,
    std::span<const double> breakpoints = {});

/// Domain of a principal-value integral.
struct PvDomain {
  enum class Kind { Interval, HalfLine, WholeLine };

  Kind kind;
  double lo = 0.0;
  double hi = 0.0;

  static PvDomain interval(double lo, double hi) { return {Kind::Interval, lo, hi}; }
  static PvDomain half_line() { return {Kind::HalfLine, 0.0, 0.0}; }
  static PvDomain whole_line() { return {Kind::WholeLine, 0.0, 0.0}; }
};

/// Poles closer than ten times this width are rejected by integrate_pv.
inline constexpr double kPvExcisionWidth = 1e-4;

/// Principal value of ∫ numerator(s) / Π_k (s² - p_k²) ds over `domain`.
///
/// Poles p_k must be positive and strictly inside the domain (intervals must
/// satisfy lo ≥ 0). Each partial-fraction term is handled by subtracting
/// numerator(p) over a window around the pole and adding the window's PV
/// integral analytically. `tail_rate` bounds the numerator's decay on
/// unbounded domains.
QuadratureResult integrate_pv(const RealFn& numerator, std::span<const double> poles,
                              const PvDomain& domain, double tol,
                              double tail_rate = 1.0);

/// Brent's method on a sign-changing bracket. Throws NoSignChange.
double find_root_bracketed(const RealFn& objective, Bracket bracket, double tol);

/// Number of samples used for the post-hoc unimodality check.
inline constexpr int kUnimodalitySamples = 25;

/// Brent's minimizer (golden section with parabolic steps) to absolute
/// abscissa tolerance `tol`. Afterwards the objective is sampled on a uniform
/// grid; a sample sequence that is not "non-increasing then non-decreasing"
/// raises NotUnimodal.
double minimize_scalar(const RealFn& objective, Bracket bracket, double tol,
                       int unimodality_samples = kUnimodalitySamples);

}  // namespace conical
