#pragma once

#include <complex>

namespace conical {

using Complex = std::complex<double>;

/// Below this argument (σ units) the point-detector correlation kernel is
/// treated as divergent.
inline constexpr double kDivergenceCutoff = 1e-10;

/// Arguments a below this value use the analytic a→0 limit of K(a)/a.
inline constexpr double kKernelSmallArgument = 1e-8;

/// Faddeeva function w(z) = exp(-z²) erfc(-iz), valid on the whole plane.
///
/// Regionally switched: a Taylor series around the origin, a shifted
/// Laplace continued fraction (Gautschi) in the intermediate annulus and the
/// plain continued fraction far out. The lower half plane follows from
/// w(z) = 2 exp(-z²) - w(-z).
Complex faddeeva_w(Complex z);

/// Scaled real complementary error function exp(x²) erfc(x).
double erfcx(double x);

/// Complex erfc(z) = exp(-z²) w(iz). Throws OverflowDomain for |Im z| > 12.
Complex erfc_complex(Complex z);

/// Complex erf(z) = 1 - erfc(z), same domain as erfc_complex.
Complex erf_complex(Complex z);

/// Response kernel
///   K(a, g) = exp(-a²) { Im[exp(2iga) erf(ia + g)] - sin(2ga) },
/// evaluated through the overflow-free reduction K = -exp(-g²) Im w(-a + ig).
/// `gap` is Ωσ and `a` is a half-distance in σ units.
double response_kernel(double a, double gap);

/// Same kernel evaluated literally from the complex error function. Only
/// valid while a ≤ 12; kept to validate the production reduction.
double response_kernel_direct(double a, double gap);

/// K(a, g) / a with the finite a→0 limit
///   exp(-g²) (2/√π - 2 g erfcx(g))
/// substituted for a < kKernelSmallArgument.
double response_kernel_ratio(double a, double gap);

/// Limit of K(a, g) / a as a → 0.
double response_kernel_ratio_limit(double gap);

/// Auxiliary correlation function per λ²,
///   f(z) = -i exp(-g² - z²) erfc(iz) / (8 √π z) = -i exp(-g²) w(-z) / (8 √π z).
/// Throws DivergentArgument for z ≤ kDivergenceCutoff.
Complex aux_f(double z, double gap);

namespace detail {

/// sin(πx) and cos(πx) with exact zeros at integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);

}  // namespace detail

}  // namespace conical
