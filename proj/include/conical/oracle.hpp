#pragma once

#include <complex>
#include <string>
#include <vector>

#include "conical/quadrature.hpp"

// Independent recomputation of responses and correlations from the
// distributional s-integral representations (principal values plus delta
// terms). Nothing here calls the closed-form production paths; the only
// dependencies are the quadrature routines and <cmath>.

namespace conical::oracle {

using Complex = std::complex<double>;

/// One production-vs-oracle comparison.
struct OracleReport {
  std::string quantity;
  Complex production;
  Complex oracle;
  double abs_deviation = 0.0;
  double rel_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Magnitudes below this fall back to an absolute comparison.
inline constexpr double kAbsoluteFloor = 1e-12;

OracleReport compare(std::string quantity, Complex production, Complex oracle, double tolerance);

/// P₀ from the subtracted-singularity s-integral plus the delta term.
double p0(double gap);

/// Weighted contribution of each image m = 1..⌊ν/2⌋ to P₁ (delta term plus
/// single-pole PV integral). Empty for ν < 2.
std::vector<double> p1_terms(double rho, double nu, double gap);
double p1(double rho, double nu, double gap);

/// ζ-integral of PV s-integrals. Zero for integer ν.
double p2(double rho, double nu, double gap);

/// X₀ from the PV u-integral and its exact imaginary delta term.
Complex x0(double d, double gap);

/// Image and ζ-integral pieces of the parallel same-side correlation.
Complex xp_images(double l, double d, double nu, double gap);
Complex xp_integral(double l, double d, double nu, double gap);
/// x0 + xp_images + xp_integral.
Complex xp(double l, double d, double nu, double gap);

/// P₀ at finite regulator ε for ε ∈ {1e-2, 5e-3, 2.5e-3}, Richardson
/// extrapolated to ε → 0 and compared against `production`.
OracleReport epsilon_extrapolation_check(double gap, double production, double tolerance = 1e-4);

/// The finite-ε integral itself.
double p0_regulated(double gap, double epsilon);

}  // namespace conical::oracle
