#include "conical/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "conical/errors.hpp"

namespace conical {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 * std::numbers::inv_sqrtpi;
constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;
constexpr double kMaxImagForErfc = 12.0;

// w(z) for x ≥ 0, y ≥ 0. Region boundaries follow Poppe & Wijers; the term
// counts are padded a little beyond theirs to reach ~1e-14.
Complex faddeeva_first_quadrant(double x, double y) {
  const double xs = x / 6.3;
  const double ys = y / 4.4;
  const double rho2 = xs * xs + ys * ys;

  if (rho2 < 0.085264) {
    // Power series of exp(z²) w(z) around the origin.
    const double xquad = x * x - y * y;
    const double yquad = 2.0 * x * y;
    const double q = (1.0 - 0.85 * ys) * std::sqrt(rho2);
    const int n = static_cast<int>(std::lround(8.0 + 72.0 * q));
    int j = 2 * n + 1;
    double xsum = 1.0 / j;
    double ysum = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double xaux = (xsum * xquad - ysum * yquad) / i;
      ysum = (xsum * yquad + ysum * xquad) / i;
      xsum = xaux + 1.0 / j;
    }
    const double u1 = -kTwoOverSqrtPi * (xsum * y + ysum * x) + 1.0;
    const double v1 = kTwoOverSqrtPi * (xsum * x - ysum * y);
    const double e = std::exp(-xquad);
    const double u2 = e * std::cos(yquad);
    const double v2 = -e * std::sin(yquad);
    return {u1 * u2 - v1 * v2, u1 * v2 + v1 * u2};
  }

  double h = 0.0;
  int kapn = 0;
  int nu = 0;
  if (rho2 > 1.0) {
    const double q = std::sqrt(rho2);
    nu = static_cast<int>(6.0 + 1442.0 / (26.0 * q + 77.0));
  } else {
    // Truncated Taylor expansion about z + ih whose derivatives come from
    // the continued fraction.
    const double q = (1.0 - ys) * std::sqrt(1.0 - rho2);
    h = 1.88 * q;
    kapn = static_cast<int>(std::lround(9.0 + 34.0 * q));
    nu = static_cast<int>(std::lround(20.0 + 26.0 * q));
  }

  const bool shifted = h > 0.0;
  const double h2 = 2.0 * h;
  double lambda = shifted ? std::pow(h2, kapn) : 0.0;
  double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
  for (int n = nu; n >= 0; --n) {
    const double np1 = n + 1.0;
    double tx = y + h + np1 * rx;
    const double ty = x - np1 * ry;
    const double c = 0.5 / (tx * tx + ty * ty);
    rx = c * tx;
    ry = c * ty;
    if (shifted && n <= kapn) {
      tx = lambda + sx;
      sx = rx * tx - ry * sy;
      sy = ry * tx + rx * sy;
      lambda /= h2;
    }
  }
  Complex w = shifted ? Complex{kTwoOverSqrtPi * sx, kTwoOverSqrtPi * sy}
                      : Complex{kTwoOverSqrtPi * rx, kTwoOverSqrtPi * ry};
  if (y == 0.0) w.real(std::exp(-x * x));
  return w;
}

void check_finite(Complex z, const char* where) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    std::ostringstream msg;
    msg << where << ": non-finite argument";
    throw InvalidParameter(msg.str());
  }
}

}  // namespace

namespace detail {

double sin_pi(double x) {
  // Reduce to r ∈ [-1, 1] where sin(πx) = ±sin(πr).
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

double cos_pi(double x) {
  double r = std::fmod(std::fabs(x), 2.0);
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0) return -1.0;
  return std::cos(std::numbers::pi * r);
}

}  // namespace detail

Complex faddeeva_w(Complex z) {
  check_finite(z, "faddeeva_w");
  const double x = z.real();
  const double y = z.imag();
  const double ax = std::fabs(x);
  const double ay = std::fabs(y);

  Complex w = faddeeva_first_quadrant(ax, ay);
  if (y >= 0.0) {
    // w(-conj z) = conj w(z)
    if (x < 0.0) w = std::conj(w);
    return w;
  }
  // Lower half plane: w(z) = 2 exp(-z²) - w(-z), with -z in the upper half.
  Complex w_neg = faddeeva_first_quadrant(ax, ay);
  if (-x < 0.0) w_neg = std::conj(w_neg);
  return 2.0 * std::exp(-z * z) - w_neg;
}

double erfcx(double x) {
  if (x >= 0.0) return faddeeva_w(Complex{0.0, x}).real();
  // exp(x²) erfc(x) = 2 exp(x²) - erfcx(-x)
  return 2.0 * std::exp(x * x) - faddeeva_w(Complex{0.0, -x}).real();
}

Complex erfc_complex(Complex z) {
  check_finite(z, "erfc_complex");
  if (std::fabs(z.imag()) > kMaxImagForErfc) {
    std::ostringstream msg;
    msg << "erfc_complex: |Im z| = " << std::fabs(z.imag())
        << " exceeds " << kMaxImagForErfc << " (use the scaled kernels)";
    throw OverflowDomain(msg.str());
  }
  if (z.imag() == 0.0) return {std::erfc(z.real()), 0.0};
  const Complex iz{-z.imag(), z.real()};
  return std::exp(-z * z) * faddeeva_w(iz);
}

Complex erf_complex(Complex z) {
  if (z.imag() == 0.0) return {std::erf(z.real()), 0.0};
  return 1.0 - erfc_complex(z);
}

double response_kernel(double a, double gap) {
  return -std::exp(-gap * gap) * faddeeva_w(Complex{-a, gap}).imag();
}

double response_kernel_direct(double a, double gap) {
  const Complex phase = std::polar(1.0, 2.0 * gap * a);
  const Complex erf_val = erf_complex(Complex{gap, a});
  return std::exp(-a * a) *
         ((phase * erf_val).imag() - std::sin(2.0 * gap * a));
}

double response_kernel_ratio_limit(double gap) {
  return std::exp(-gap * gap) * kTwoOverSqrtPi - 2.0 * gap * std::erfc(gap);
}

double response_kernel_ratio(double a, double gap) {
  if (a < kKernelSmallArgument) return response_kernel_ratio_limit(gap);
  return response_kernel(a, gap) / a;
}

Complex aux_f(double z, double gap) {
  if (!(z > kDivergenceCutoff)) {
    std::ostringstream msg;
    msg << "aux_f: argument " << z << " at or below divergence cutoff "
        << kDivergenceCutoff;
    throw DivergentArgument(msg.str(), z);
  }
  const Complex w = faddeeva_w(Complex{-z, 0.0});
  const Complex minus_i{0.0, -1.0};
  return minus_i * std::exp(-gap * gap) * w / (8.0 * kSqrtPi * z);
}

}  // namespace conical
