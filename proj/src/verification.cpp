#include "conical/verification.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "conical/parallel.hpp"

namespace conical {

namespace {

using oracle::compare;
using oracle::OracleReport;

std::string label(const char* quantity, const ValidationPoint& p) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s (nu=%g, l=%g, d=%g, gap=%g)", quantity, p.nu, p.l, p.d,
                p.gap);
  return buf;
}

}  // namespace

ProductionPaths production_paths() {
  ProductionPaths p;
  p.p_flat = [](double gap) { return conical::p_flat(gap); };
  p.p_images = [](double rho, const ConeParameter& nu, double gap) {
    return p_string(rho, nu, gap).image_contributions;
  };
  p.p_integral = [](double rho, const ConeParameter& nu, double gap) {
    return p_string(rho, nu, gap).p_integral;
  };
  p.p_total = [](double rho, const ConeParameter& nu, double gap) {
    return p_string(rho, nu, gap).total;
  };
  p.x_flat = [](double d, double gap) { return conical::x_flat(d, gap); };
  p.x_total = [](const PairConfig& c, const ConeParameter& nu) {
    return correlation(c, nu).total;
  };
  p.p_boundary = [](double l, double gap) { return conical::p_boundary(l, gap); };
  return p;
}

const std::vector<ValidationPoint>& standard_grid() {
  static const std::vector<ValidationPoint> grid{
      {1.0, 0.5, 0.5, 0.0},  {1.5, 0.3, 1.0, 0.1}, {2.0, 0.5, 0.5, 0.1},
      {2.5, 1.0, 1.0, 0.1},  {3.0, 1.0, 0.5, 0.1}, {3.7, 0.2, 2.0, 0.5},
      {4.0, 0.5, 1.0, 0.1},  {5.5, 0.8, 0.3, 1.0}, {6.5, 1.5, 2.5, 0.5},
      {7.0, 2.0, 1.0, 1.5},  {9.2, 3.0, 0.1, 0.1}, {11.0, 0.1, 4.0, 1.5},
  };
  return grid;
}

std::vector<ValidationPoint> validation_grid(VerifyProfile profile) {
  const auto& full = standard_grid();
  if (profile == VerifyProfile::Default) return full;
  return {full[1], full[3], full[6], full[10]};
}

std::vector<OracleReport> oracle_reports(const ValidationPoint& p, const ProductionPaths& paths) {
  std::vector<OracleReport> out;
  const ConeParameter nu(p.nu);

  out.push_back(compare(label("P0", p), paths.p_flat(p.gap), oracle::p0(p.gap), kP0Tolerance));

  const auto images = paths.p_images(p.l, nu, p.gap);
  const auto image_oracle = oracle::p1_terms(p.l, p.nu, p.gap);
  for (std::size_t m = 0; m < image_oracle.size(); ++m) {
    const double prod = m < images.size() ? images[m] : 0.0;
    const std::string name = "P1[m=" + std::to_string(m + 1) + "]";
    out.push_back(compare(label(name.c_str(), p), prod, image_oracle[m], kP1Tolerance));
  }
  if (!nu.is_integer()) {
    out.push_back(compare(label("P2", p), paths.p_integral(p.l, nu, p.gap),
                          oracle::p2(p.l, p.nu, p.gap), kP2Tolerance));
  }

  out.push_back(compare(label("X0", p), paths.x_flat(p.d, p.gap), oracle::x0(p.d, p.gap),
                        kX0Tolerance));
  const PairConfig config{Alignment::ParallelSameSide, p.l, p.d, p.gap};
  out.push_back(compare(label("XP", p), paths.x_total(config, nu),
                        oracle::xp(p.l, p.d, p.nu, p.gap),
                        nu.is_integer() ? kXpTolerance : kXpNestedTolerance));
  return out;
}

double zeta_sum_rule_numeric(const ConeParameter& nu, double tol) {
  // same_side_coefficient carries the extra ν/π
  auto f = [&](double z) { return std::numbers::pi / nu.nu() * same_side_coefficient(nu.nu(), z); };
  ZetaSpec spec;
  spec.kind = ZetaKind::SameSide;
  spec.nu = nu.nu();
  const auto breaks = spec.breakpoints();
  return integrate_semi_infinite(f, nu.nu(), tol, 0.0, breaks).value;
}

double zeta_sum_rule_exact(const ConeParameter& nu) {
  const double v = nu.nu();
  return std::numbers::pi / v * (v - 1.0 - 2.0 * std::floor(v / 2.0));
}

std::vector<OracleReport> identity_reports(VerifyProfile profile, const ProductionPaths& paths) {
  std::vector<OracleReport> out;
  char buf[128];
  const double gap = 0.1;

  for (double v : {1.5, 2.0, 2.5, 3.0, 11.0}) {
    const ConeParameter nu(v);
    std::snprintf(buf, sizeof buf, "P(l=0) = nu*P0 (nu=%g)", v);
    out.push_back(compare(buf, paths.p_total(0.0, nu, gap), v * paths.p_flat(gap), 1e-6));
  }

  for (double v : {1.3, 2.5, 3.7, 9.2}) {
    const ConeParameter nu(v);
    std::snprintf(buf, sizeof buf, "zeta sum rule (nu=%g)", v);
    out.push_back(compare(buf, zeta_sum_rule_numeric(nu), zeta_sum_rule_exact(nu), 1e-8));
  }

  out.push_back(compare("P_boundary(l=1e-7) = 0", paths.p_boundary(1e-7, gap), 0.0, 1e-6));
  // The image term falls off as exp(-g²)/(8π l²), not exponentially.
  const double far = 50.0;
  out.push_back(compare("P_boundary(l=50) ~ P0 - exp(-g^2)/(8 pi l^2)", paths.p_boundary(far, gap),
                        paths.p_flat(gap) - std::exp(-gap * gap) / (8.0 * std::numbers::pi * far * far),
                        1e-7));

  const std::vector<double> eps_gaps =
      profile == VerifyProfile::Fast ? std::vector<double>{0.1} : std::vector<double>{0.0, 0.1, 1.0};
  for (double g : eps_gaps) {
    out.push_back(oracle::epsilon_extrapolation_check(g, paths.p_flat(g)));
  }
  return out;
}

bool VerificationSummary::all_pass() const {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

std::vector<OracleReport> VerificationSummary::failures() const {
  std::vector<OracleReport> out;
  for (const auto& r : reports) {
    if (!r.pass) out.push_back(r);
  }
  return out;
}

VerificationSummary run_verification(VerifyProfile profile, const ProductionPaths& paths,
                                     int threads) {
  const auto grid = validation_grid(profile);
  std::vector<std::vector<OracleReport>> per_point(grid.size());
  parallel::for_each_index(grid.size(), threads, [&](std::size_t i) {
    per_point[i] = oracle_reports(grid[i], paths);
  });
  VerificationSummary summary;
  for (auto& block : per_point) {
    for (auto& r : block) summary.reports.push_back(std::move(r));
  }
  for (auto& r : identity_reports(profile, paths)) summary.reports.push_back(std::move(r));
  return summary;
}

}  // namespace conical
