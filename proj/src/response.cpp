#include "conical/response.hpp"

#include <cmath>
#include <numbers>

#include "conical/errors.hpp"
#include "conical/special_functions.hpp"

namespace conical {

namespace {

constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;

void check_gap(double gap) {
  if (!(gap >= 0.0) || !std::isfinite(gap)) throw InvalidParameter("gap must be finite and >= 0");
}

}  // namespace

double p_flat(double gap) {
  check_gap(gap);
  // exp(-g²) (1 - √π g erfcx(g)) avoids the erfc underflow at large gap.
  return std::exp(-gap * gap) * (1.0 - kSqrtPi * gap * erfcx(gap)) / (4.0 * std::numbers::pi);
}

ResponseBreakdown p_string(double rho, const ConeParameter& nu, double gap, double tol) {
  check_gap(gap);
  if (!(rho >= 0.0) || !std::isfinite(rho)) throw InvalidParameter("rho must be finite and >= 0");

  ResponseBreakdown out;
  out.p_flat = p_flat(gap);

  // Each image contributes K(a)/a / (4√π) with a = ρ sin(mπ/ν); at a → 0
  // this tends to 2 P₀.
  for (const auto& term : image_terms(nu)) {
    const double value =
        term.weight * response_kernel_ratio(rho * term.sin_term, gap) / (4.0 * kSqrtPi);
    out.image_contributions.push_back(value);
    out.p_images += value;
  }

  if (!nu.is_integer()) {
    ZetaSpec zeta;
    zeta.kind = ZetaKind::SameSide;
    zeta.nu = nu.nu();
    const auto cuts = zeta.breakpoints();
    auto integrand = [&](double z) {
      return zeta.coefficient(z) * response_kernel_ratio(rho * std::cosh(0.5 * z), gap);
    };
    const double scale = 8.0 * kSqrtPi;
    const auto r = integrate_semi_infinite(integrand, zeta.tail_rate(), tol * scale, 0.0, cuts);
    out.p_integral = r.value / scale;
  }

  out.total = out.p_flat + out.p_images + out.p_integral;
  return out;
}

double p_boundary(double l, double gap) {
  check_gap(gap);
  if (!(l >= 0.0) || !std::isfinite(l)) throw InvalidParameter("l must be finite and >= 0");
  if (l < kKernelSmallArgument) return 0.0;
  return p_flat(gap) - response_kernel_ratio(l, gap) / (8.0 * kSqrtPi);
}

namespace {

ResponseBreakdown boundary_breakdown(double l, double gap) {
  ResponseBreakdown out;
  out.p_flat = p_flat(gap);
  out.total = p_boundary(l, gap);
  out.p_images = out.total - out.p_flat;
  out.image_contributions.push_back(out.p_images);
  return out;
}

ResponseBreakdown flat_breakdown(double gap) {
  ResponseBreakdown out;
  out.p_flat = p_flat(gap);
  out.total = out.p_flat;
  return out;
}

}  // namespace

ResponsePair detector_responses(const PairConfig& config, const ConeParameter& nu, double tol) {
  config.validate();
  switch (config.alignment) {
    case Alignment::Flat:
      return {flat_breakdown(config.gap), flat_breakdown(config.gap)};
    case Alignment::BoundaryParallel: {
      auto a = boundary_breakdown(config.l, config.gap);
      return {a, a};
    }
    case Alignment::BoundaryOrthogonal:
      return {boundary_breakdown(config.l, config.gap),
              boundary_breakdown(config.l + config.d, config.gap)};
    default: break;
  }
  const RadialPair rho = radial_pair(config);
  ResponseBreakdown a = p_string(rho.rho_a, nu, config.gap, tol);
  if (rho.rho_b == rho.rho_a) return {a, a};
  return {std::move(a), p_string(rho.rho_b, nu, config.gap, tol)};
}

}  // namespace conical
