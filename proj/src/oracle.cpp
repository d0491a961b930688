#include "conical/oracle.hpp"

#include <cmath>
#include <numbers>

#include "conical/errors.hpp"

namespace conical::oracle {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

// Inner integrals are pushed well below the oracle targets so that the
// outer ζ-quadrature sees a smooth integrand.
constexpr double kInnerTol = 1e-12;
constexpr double kOuterTol = 1e-10;

void require(bool ok, const char* what) {
  if (!ok) throw InvalidParameter(what);
}

bool integer_valued(double x) { return std::fabs(x - std::round(x)) <= 1e-12; }

// PV ∫₀^∞ cos(g s) e^{-s²/4} / (s² - b²) ds
double pv_cos_gauss(double gap, double b) {
  const double pole[] = {b};
  return integrate_pv([gap](double s) { return std::cos(gap * s) * std::exp(-0.25 * s * s); },
                      pole, PvDomain::half_line(), kInnerTol, 0.25)
      .value;
}

// H(D) = PV ∫₀^∞ e^{-u²/4} / (u² - D²) du - iπ e^{-D²/4} / (2D)
Complex h_function(double big_d) {
  const double pole[] = {big_d};
  const double re =
      integrate_pv([](double u) { return std::exp(-0.25 * u * u); }, pole, PvDomain::half_line(),
                   kInnerTol, 0.25)
          .value;
  return {re, -kPi * std::exp(-0.25 * big_d * big_d) / (2.0 * big_d)};
}

double zeta_denominator(double nu, double zeta) {
  // cosh νζ - cos νπ, written as a sum of squares
  const double a = std::sin(0.5 * nu * kPi);
  const double b = std::sinh(0.5 * nu * zeta);
  return 2.0 * (a * a + b * b);
}

}  // namespace

OracleReport compare(std::string quantity, Complex production, Complex oracle_value,
                     double tolerance) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.production = production;
  r.oracle = oracle_value;
  r.tolerance = tolerance;
  r.abs_deviation = std::abs(production - oracle_value);
  const double scale = std::abs(oracle_value);
  r.rel_deviation = scale > 0.0 ? r.abs_deviation / scale : r.abs_deviation;
  r.pass = scale < kAbsoluteFloor ? r.abs_deviation <= kAbsoluteFloor
                                  : r.rel_deviation <= tolerance;
  return r;
}

double p0(double gap) {
  require(gap >= 0.0, "p0 oracle: gap must be >= 0");
  // [f(s) + f(-s) - 2 f(0)] / s² with f(s) = e^{-igs} e^{-s²/4}
  auto integrand = [gap](double s) {
    if (s < 1e-4) {
      // series to O(s²): -(2g² + 1)/2 + ...
      return -(gap * gap + 0.5) + s * s * (std::pow(gap, 4) / 12.0 + gap * gap / 4.0 + 1.0 / 16.0);
    }
    const double h = std::sin(0.5 * gap * s);
    return 2.0 * (std::expm1(-0.25 * s * s) - 2.0 * std::exp(-0.25 * s * s) * h * h) / (s * s);
  };
  // Beyond the split the Gaussian is below 1e-30 and the integrand is -2/s².
  const double split = 17.0;
  const double breaks[] = {1.0, 4.0, 8.0};
  const double body = integrate(integrand, Bracket(0.0, split), kInnerTol, breaks, 20000).value;
  const double integral = body - 2.0 / split;
  return -integral / (4.0 * kPi * kSqrtPi) - gap / (4.0 * kSqrtPi);
}

std::vector<double> p1_terms(double rho, double nu, double gap) {
  require(rho > 0.0 && nu >= 1.0 && gap >= 0.0, "p1 oracle: need rho > 0, nu >= 1, gap >= 0");
  std::vector<double> out;
  const int count = static_cast<int>(std::floor(nu / 2.0 + 1e-12));
  const bool even = integer_valued(nu) && static_cast<int>(std::round(nu)) % 2 == 0;
  for (int m = 1; m <= count; ++m) {
    const double weight = even && 2 * m == static_cast<int>(std::round(nu)) ? 0.5 : 1.0;
    const double b = 2.0 * rho * std::sin(m * kPi / nu);
    const double delta = -std::sin(gap * b) * std::exp(-0.25 * b * b) / (2.0 * kSqrtPi * b);
    const double pv = -pv_cos_gauss(gap, b) / (kPi * kSqrtPi);
    out.push_back(weight * (delta + pv));
  }
  return out;
}

double p1(double rho, double nu, double gap) {
  double sum = 0.0;
  for (double t : p1_terms(rho, nu, gap)) sum += t;
  return sum;
}

double p2(double rho, double nu, double gap) {
  require(rho > 0.0 && nu >= 1.0 && gap >= 0.0, "p2 oracle: need rho > 0, nu >= 1, gap >= 0");
  if (integer_valued(nu)) return 0.0;
  auto integrand = [&](double zeta) {
    const double big_b = 2.0 * rho * std::cosh(0.5 * zeta);
    const double inner = 2.0 * pv_cos_gauss(gap, big_b) +
                         kPi * std::sin(gap * big_b) * std::exp(-0.25 * big_b * big_b) / big_b;
    return inner / zeta_denominator(nu, zeta);
  };
  const double integral = integrate_semi_infinite(integrand, nu, kOuterTol).value;
  return nu * std::sin(nu * kPi) / (4.0 * kPi * kPi * kSqrtPi) * integral;
}

Complex x0(double d, double gap) {
  require(d > 0.0 && gap >= 0.0, "x0 oracle: need d > 0, gap >= 0");
  return std::exp(-gap * gap) * h_function(d) / (2.0 * kPi * kSqrtPi);
}

Complex xp_images(double l, double d, double nu, double gap) {
  require(l >= 0.0 && d > 0.0 && nu >= 1.0, "xp oracle: need l >= 0, d > 0, nu >= 1");
  const int count = static_cast<int>(std::floor(nu / 2.0 + 1e-12));
  const bool even = integer_valued(nu) && static_cast<int>(std::round(nu)) % 2 == 0;
  Complex sum{};
  for (int m = 1; m <= count; ++m) {
    const double weight = even && 2 * m == static_cast<int>(std::round(nu)) ? 0.5 : 1.0;
    const double s = std::sin(m * kPi / nu);
    sum += weight * h_function(std::sqrt(d * d + 4.0 * l * l * s * s));
  }
  return std::exp(-gap * gap) / (kPi * kSqrtPi) * sum;
}

Complex xp_integral(double l, double d, double nu, double gap) {
  require(l >= 0.0 && d > 0.0 && nu >= 1.0, "xp oracle: need l >= 0, d > 0, nu >= 1");
  if (integer_valued(nu)) return {};
  auto integrand = [&](double zeta) {
    const double e = std::sqrt(d * d + 2.0 * l * l * (1.0 + std::cosh(zeta)));
    return h_function(e) / zeta_denominator(nu, zeta);
  };
  const auto r = integrate_semi_infinite_complex(integrand, nu, kOuterTol);
  return -nu * std::exp(-gap * gap) * std::sin(nu * kPi) / (2.0 * kPi * kPi * kSqrtPi) *
         r.value();
}

Complex xp(double l, double d, double nu, double gap) {
  return x0(d, gap) + xp_images(l, d, nu, gap) + xp_integral(l, d, nu, gap);
}

double p0_regulated(double gap, double epsilon) {
  require(gap >= 0.0 && epsilon > 0.0, "p0_regulated: need gap >= 0, epsilon > 0");
  const double e2 = epsilon * epsilon;
  auto integrand = [&](double s) {
    const double q = s * s + e2;
    return std::exp(-0.25 * s * s) *
           (2.0 * (s * s - e2) * std::cos(gap * s) + 4.0 * epsilon * s * std::sin(gap * s)) /
           (q * q);
  };
  const double breaks[] = {epsilon, 2.0 * epsilon, 5.0 * epsilon, 10.0 * epsilon,
                           100.0 * epsilon, 1.0};
  const double split = 17.0;
  const double body = integrate(integrand, Bracket(0.0, split), 1e-9, breaks, 20000).value;
  // Gaussian-suppressed tail: e^{-17²/4} < 1e-31.
  return -body / (4.0 * kPi * kSqrtPi);
}

OracleReport epsilon_extrapolation_check(double gap, double production, double tolerance) {
  const double e0 = 1e-2;
  const double a = p0_regulated(gap, e0);
  const double b = p0_regulated(gap, 0.5 * e0);
  const double c = p0_regulated(gap, 0.25 * e0);
  // Error expansion a₁ε + a₂ε²: two Richardson levels.
  const double r1 = 2.0 * b - a;
  const double r2 = 2.0 * c - b;
  const double extrapolated = (4.0 * r2 - r1) / 3.0;
  return compare("P0 epsilon->0 (gap=" + std::to_string(gap) + ")", production, extrapolated,
                 tolerance);
}

}  // namespace conical::oracle
