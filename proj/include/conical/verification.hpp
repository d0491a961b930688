#pragma once

#include <functional>
#include <vector>

#include "conical/entanglement.hpp"
#include "conical/oracle.hpp"

namespace conical {

/// Production entry points exercised by the verification suite. Tests swap
/// individual members to check that a perturbed path is caught.
struct ProductionPaths {
  std::function<double(double gap)> p_flat;
  std::function<std::vector<double>(double rho, const ConeParameter& nu, double gap)> p_images;
  std::function<double(double rho, const ConeParameter& nu, double gap)> p_integral;
  std::function<double(double rho, const ConeParameter& nu, double gap)> p_total;
  std::function<Complex(double d, double gap)> x_flat;
  std::function<Complex(const PairConfig& config, const ConeParameter& nu)> x_total;
  std::function<double(double l, double gap)> p_boundary;
};

ProductionPaths production_paths();

enum class VerifyProfile { Default, Fast };

struct ValidationPoint {
  double nu;
  double l;
  double d;
  double gap;
};

/// The 12 (ν, l, d, gap) points of the default profile.
const std::vector<ValidationPoint>& standard_grid();
std::vector<ValidationPoint> validation_grid(VerifyProfile profile);

inline constexpr double kP0Tolerance = 1e-8;
inline constexpr double kP1Tolerance = 1e-6;
inline constexpr double kP2Tolerance = 1e-5;
inline constexpr double kX0Tolerance = 1e-8;
inline constexpr double kXpTolerance = 1e-6;
inline constexpr double kXpNestedTolerance = 1e-5;

/// Oracle comparisons at one point: P₀, each P₁ image term, P₂, X₀, X_P.
std::vector<oracle::OracleReport> oracle_reports(const ValidationPoint& point,
                                                 const ProductionPaths& paths);

/// Closed-form identities: l = 0 responses, the ζ-integral sum rule,
/// reflecting-plane limits and the ε → 0 extrapolation of P₀.
std::vector<oracle::OracleReport> identity_reports(VerifyProfile profile,
                                                   const ProductionPaths& paths);

struct VerificationSummary {
  std::vector<oracle::OracleReport> reports;

  bool all_pass() const;
  std::vector<oracle::OracleReport> failures() const;
};

/// Oracle grid plus identity suite; grid points run on OpenMP threads and
/// reports keep grid order.
VerificationSummary run_verification(VerifyProfile profile,
                                     const ProductionPaths& paths = production_paths(),
                                     int threads = 0);

/// ∫₀^∞ sin νπ / (cos νπ - cosh νζ) dζ by quadrature of the production
/// coefficient.
double zeta_sum_rule_numeric(const ConeParameter& nu, double tol = 1e-12);
/// (π/ν)(ν - 1 - 2⌊ν/2⌋).
double zeta_sum_rule_exact(const ConeParameter& nu);

}  // namespace conical
