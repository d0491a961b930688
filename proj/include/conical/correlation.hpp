#pragma once

#include <vector>

#include "conical/geometry.hpp"
#include "conical/quadrature.hpp"
#include "conical/special_functions.hpp"

namespace conical {

struct ImageContribution {
  int m;
  double weight;
  double z;
  Complex value;  ///< 2·weight·f(z)
};

/// Nonlocal correlation X per λ², split by origin.
struct CorrelationBreakdown {
  Complex x_flat;
  Complex x_images;
  Complex x_integral;
  Complex total;
  std::vector<ImageContribution> images;
};

/// Minkowski correlation X₀ = f(d/2). Throws DivergentOverlap for
/// d ≤ kDivergenceCutoff.
Complex x_flat(double d, double gap);

/// X₀ + 2 Σ' f(z_m) + ∫ dζ c(ζ) f(z(ζ)) for the flat and string alignments.
/// Throws DivergentOverlap when an image lands on the partner detector.
CorrelationBreakdown x_string(const PairConfig& config, const ConeParameter& nu,
                              double tol = kProductionTolerance);

/// Reflecting-plane correlation: the single image is subtracted from X₀.
Complex x_boundary(const PairConfig& config);

/// Dispatches to x_string or x_boundary.
CorrelationBreakdown correlation(const PairConfig& config, const ConeParameter& nu,
                                 double tol = kProductionTolerance);

}  // namespace conical
