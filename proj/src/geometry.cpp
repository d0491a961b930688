#include "conical/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "conical/errors.hpp"
#include "conical/special_functions.hpp"

namespace conical {

using detail::cos_pi;
using detail::sin_pi;

ConeParameter::ConeParameter(double nu) : nu_(nu) {
  if (!std::isfinite(nu) || nu < kMin - kIntegerTolerance || nu > kMax + kIntegerTolerance) {
    std::ostringstream msg;
    msg << "ConeParameter: nu = " << nu << " outside [" << kMin << ", " << kMax << "]";
    throw InvalidParameter(msg.str());
  }
  const double rounded = std::round(nu);
  if (std::fabs(nu - rounded) <= kIntegerTolerance) nu_ = rounded;
}

bool ConeParameter::is_integer() const { return nu_ == std::round(nu_); }

bool ConeParameter::is_even_integer() const {
  return is_integer() && std::fmod(nu_, 2.0) == 0.0;
}

bool ConeParameter::is_half_integer_multiple() const {
  const double twice = 2.0 * nu_;
  return std::fabs(twice - std::round(twice)) <= 2.0 * kIntegerTolerance;
}

int ConeParameter::image_count() const { return static_cast<int>(std::floor(nu_ / 2.0)); }

double ConeParameter::deficit_angle() const { return 2.0 * std::numbers::pi * (nu_ - 1.0) / nu_; }

double ConeParameter::string_tension_gmu() const { return 0.25 * (1.0 - 1.0 / nu_); }

std::string_view to_string(Alignment a) {
  switch (a) {
    case Alignment::Flat: return "flat";
    case Alignment::ParallelSameSide: return "parallel";
    case Alignment::OrthogonalSameSide: return "orthogonal";
    case Alignment::OrthogonalOppositeSides: return "opposite";
    case Alignment::BoundaryParallel: return "boundary-parallel";
    case Alignment::BoundaryOrthogonal: return "boundary-orthogonal";
  }
  return "unknown";
}

std::optional<Alignment> parse_alignment(std::string_view name) {
  if (name == "flat") return Alignment::Flat;
  if (name == "parallel" || name == "parallel-same-side") return Alignment::ParallelSameSide;
  if (name == "orthogonal" || name == "orthogonal-same-side") return Alignment::OrthogonalSameSide;
  if (name == "opposite" || name == "orthogonal-opposite-sides") {
    return Alignment::OrthogonalOppositeSides;
  }
  if (name == "boundary-parallel") return Alignment::BoundaryParallel;
  if (name == "boundary-orthogonal") return Alignment::BoundaryOrthogonal;
  return std::nullopt;
}

bool is_boundary(Alignment a) {
  return a == Alignment::BoundaryParallel || a == Alignment::BoundaryOrthogonal;
}

bool is_same_side(Alignment a) {
  return a == Alignment::ParallelSameSide || a == Alignment::OrthogonalSameSide;
}

void PairConfig::validate() const {
  auto fail = [](const std::string& what) { throw InvalidParameter("PairConfig: " + what); };
  if (!std::isfinite(l) || !std::isfinite(d) || !std::isfinite(gap)) fail("non-finite value");
  if (l < 0.0) fail("l must be >= 0");
  if (!(d > 0.0)) fail("d must be > 0");
  if (gap < 0.0) fail("gap must be >= 0");
  if (alignment == Alignment::OrthogonalOppositeSides) {
    if (!(l > 0.0)) fail("opposite sides requires l > 0");
    if (d < 2.0 * l * (1.0 - 1e-12)) {
      std::ostringstream msg;
      msg << "opposite sides requires d >= 2l (d = " << d << ", l = " << l << ")";
      fail(msg.str());
    }
  }
}

std::vector<ImageTerm> image_terms(const ConeParameter& nu) {
  std::vector<ImageTerm> out;
  const int count = nu.image_count();
  out.reserve(static_cast<std::size_t>(count));
  for (int m = 1; m <= count; ++m) {
    const double ratio = m / nu.nu();
    const bool half = nu.is_even_integer() && 2 * m == static_cast<int>(nu.nu());
    out.push_back({m, half ? 0.5 : 1.0, sin_pi(ratio)});
  }
  return out;
}

RadialPair radial_pair(const PairConfig& config) {
  config.validate();
  switch (config.alignment) {
    case Alignment::OrthogonalSameSide:
    case Alignment::BoundaryOrthogonal:
      return {config.l, config.l + config.d};
    case Alignment::OrthogonalOppositeSides:
      return {config.l, std::max(config.d - config.l, config.l)};
    default:
      return {config.l, config.l};
  }
}

double same_side_coefficient(double nu, double zeta) {
  const double s = sin_pi(nu);
  if (s == 0.0) return 0.0;
  const double half = sin_pi(0.5 * nu);
  const double sh = std::sinh(0.5 * nu * zeta);
  // cos α - cosh t = -2 (sin²(α/2) + sinh²(t/2))
  return -nu * s / (2.0 * std::numbers::pi * (half * half + sh * sh));
}

double opposite_coefficient(double nu, double zeta) {
  const double s = sin_pi(2.0 * nu);
  if (s == 0.0) return 0.0;
  const double half = sin_pi(nu);
  const double sh = std::sinh(0.5 * nu * zeta);
  return -nu * s / (4.0 * std::numbers::pi * (half * half + sh * sh));
}

double ZetaSpec::coefficient(double zeta) const {
  switch (kind) {
    case ZetaKind::SameSide: return same_side_coefficient(nu, zeta);
    case ZetaKind::Opposite: return opposite_coefficient(nu, zeta);
    case ZetaKind::None: break;
  }
  return 0.0;
}

double ZetaSpec::argument(double zeta) const {
  const double quarter_d2 = 0.25 * d * d;
  switch (kind) {
    case ZetaKind::SameSide: {
      const double c = std::cosh(0.5 * zeta);
      return std::sqrt(quarter_d2 + product * c * c);
    }
    case ZetaKind::Opposite: {
      const double s = std::sinh(0.5 * zeta);
      return std::sqrt(quarter_d2 + product * s * s);
    }
    case ZetaKind::None: break;
  }
  return 0.5 * d;
}

double ZetaSpec::peak_width() const {
  double half = 0.0;
  if (kind == ZetaKind::SameSide) half = sin_pi(0.5 * nu);
  else if (kind == ZetaKind::Opposite) half = sin_pi(nu);
  else return 0.0;
  // |1 - cos α| = 2 sin²(α/2); the peak only matters when this is small.
  if (2.0 * half * half >= 0.1) return 0.0;
  return 2.0 * std::fabs(half) / nu;
}

std::vector<double> ZetaSpec::breakpoints() const {
  const double delta = peak_width();
  if (delta <= 0.0) return {};
  return {delta, 10.0 * delta};
}

FArguments f_arguments(const PairConfig& config, const ConeParameter& nu) {
  config.validate();
  if (is_boundary(config.alignment)) {
    throw InvalidParameter("f_arguments: boundary alignments have no string images");
  }
  FArguments out;
  out.zeta.nu = nu.nu();
  out.zeta.d = config.d;
  if (config.alignment == Alignment::Flat) return out;

  const double l = config.l;
  const double d = config.d;
  const double quarter_d2 = 0.25 * d * d;
  const auto terms = image_terms(nu);
  out.images.reserve(terms.size());

  if (config.alignment == Alignment::OrthogonalOppositeSides) {
    const double product = l * (d - l);
    const double half_gap = 0.5 * d - l;
    for (const auto& t : terms) {
      const double c = cos_pi(t.m / nu.nu());
      const double radicand = half_gap * half_gap + product * c * c;
      out.images.push_back({t.m, t.weight, std::sqrt(std::max(radicand, 0.0))});
    }
    if (!nu.is_half_integer_multiple()) {
      out.zeta.kind = ZetaKind::Opposite;
      out.zeta.product = product;
    }
    return out;
  }

  const double rho_b = radial_pair(config).rho_b;
  const double product = l * rho_b;
  for (const auto& t : terms) {
    out.images.push_back(
        {t.m, t.weight, std::sqrt(quarter_d2 + product * t.sin_term * t.sin_term)});
  }
  if (!nu.is_integer()) {
    out.zeta.kind = ZetaKind::SameSide;
    out.zeta.product = product;
  }
  return out;
}

}  // namespace conical
