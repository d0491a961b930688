#pragma once

#include <vector>

#include "conical/geometry.hpp"
#include "conical/quadrature.hpp"

namespace conical {

/// Transition probability of one detector, per λ², split by origin.
struct ResponseBreakdown {
  double p_flat = 0.0;
  double p_images = 0.0;
  double p_integral = 0.0;
  double total = 0.0;
  /// Weighted contribution of each image m (sums to p_images).
  std::vector<double> image_contributions;
};

/// Minkowski transition probability P₀ = [exp(-g²) - √π g erfc(g)] / 4π.
double p_flat(double gap);

/// Transition probability at distance rho from a string with parameter nu.
/// At rho = 0 the total equals ν·P₀ for every ν ≥ 1.
ResponseBreakdown p_string(double rho, const ConeParameter& nu, double gap,
                           double tol = kProductionTolerance);

/// Transition probability at distance l from a reflecting plane; vanishes
/// at l = 0.
double p_boundary(double l, double gap);

/// P_A and P_B for any alignment, dispatching to p_flat / p_string /
/// p_boundary.
struct ResponsePair {
  ResponseBreakdown a;
  ResponseBreakdown b;
};
ResponsePair detector_responses(const PairConfig& config, const ConeParameter& nu,
                                double tol = kProductionTolerance);

}  // namespace conical
