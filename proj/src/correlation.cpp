#include "conical/correlation.hpp"

#include <cmath>
#include <sstream>

#include "conical/errors.hpp"

namespace conical {

namespace {

Complex checked_f(double z, double gap, int image_index) {
  if (!(z > kDivergenceCutoff)) {
    std::ostringstream msg;
    if (image_index == 0) {
      msg << "detectors overlap (d/2 = " << z << ")";
    } else {
      msg << "image m=" << image_index << " overlaps the partner detector (argument " << z << ")";
    }
    throw DivergentOverlap(msg.str(), image_index, z);
  }
  return aux_f(z, gap);
}

}  // namespace

Complex x_flat(double d, double gap) {
  if (!(gap >= 0.0)) throw InvalidParameter("x_flat: gap must be >= 0");
  if (!(d > kDivergenceCutoff)) {
    std::ostringstream msg;
    msg << "x_flat: separation " << d << " at or below the overlap cutoff";
    throw DivergentOverlap(msg.str(), 0, 0.5 * d);
  }
  return checked_f(0.5 * d, gap, 0);
}

CorrelationBreakdown x_string(const PairConfig& config, const ConeParameter& nu, double tol) {
  const FArguments args = f_arguments(config, nu);
  CorrelationBreakdown out;
  out.x_flat = x_flat(config.d, config.gap);

  for (const auto& img : args.images) {
    const Complex value = 2.0 * img.weight * checked_f(img.z, config.gap, img.m);
    out.images.push_back({img.m, img.weight, img.z, value});
    out.x_images += value;
  }

  if (args.zeta.kind != ZetaKind::None) {
    const ZetaSpec& zeta = args.zeta;
    const double gap = config.gap;
    auto integrand = [&zeta, gap](double z) {
      return zeta.coefficient(z) * aux_f(zeta.argument(z), gap);
    };
    const auto cuts = zeta.breakpoints();
    out.x_integral =
        integrate_semi_infinite_complex(integrand, zeta.tail_rate(), tol, 0.0, cuts).value();
  }

  out.total = out.x_flat + out.x_images + out.x_integral;
  return out;
}

Complex x_boundary(const PairConfig& config) {
  config.validate();
  double z = 0.0;
  switch (config.alignment) {
    case Alignment::BoundaryParallel:
      z = std::sqrt(0.25 * config.d * config.d + config.l * config.l);
      break;
    case Alignment::BoundaryOrthogonal:
      z = 0.5 * config.d + config.l;
      break;
    default:
      throw InvalidParameter("x_boundary: alignment is not a boundary alignment");
  }
  const Complex x0 = x_flat(config.d, config.gap);
  return x0 - checked_f(z, config.gap, 1);
}

CorrelationBreakdown correlation(const PairConfig& config, const ConeParameter& nu, double tol) {
  if (!is_boundary(config.alignment)) return x_string(config, nu, tol);
  CorrelationBreakdown out;
  out.x_flat = x_flat(config.d, config.gap);
  out.total = x_boundary(config);
  out.x_images = out.total - out.x_flat;
  const double z = config.alignment == Alignment::BoundaryParallel
                       ? std::sqrt(0.25 * config.d * config.d + config.l * config.l)
                       : 0.5 * config.d + config.l;
  out.images.push_back({1, -0.5, z, out.x_images});
  return out;
}

}  // namespace conical
