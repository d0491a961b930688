#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace conical::cli {

using nlohmann::json;

namespace {

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// JSON has no infinity; divergent quantities become null.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json response_json(const ResponseBreakdown& r) {
  return {{"flat", r.p_flat},
          {"images", r.p_images},
          {"integral", r.p_integral},
          {"total", r.total},
          {"image_terms", r.image_contributions}};
}

const char* status_flag(RowStatus s) {
  switch (s) {
    case RowStatus::Ok: return "0";
    case RowStatus::Diverged: return "1";
    case RowStatus::QuadratureFailure: return "quadrature_failure";
  }
  return "0";
}

}  // namespace

std::string version_line() { return std::string("# conical-harvest v") + CONICAL_VERSION; }

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_sweep_csv(std::ostream& os, const SweepTable& table) {
  os << version_line() << '\n'
     << "param,P_A_per_lambda2,P_B_per_lambda2,abs_X_per_lambda2,concurrence_per_lambda2,diverged\n";
  for (const auto& r : table.rows) {
    os << format_number(r.param) << ',' << format_number(r.p_a) << ',' << format_number(r.p_b)
       << ',' << format_number(r.abs_x) << ',' << format_number(r.concurrence) << ','
       << status_flag(r.status) << '\n';
  }
}

json sweep_json(const SweepSpec& spec, const SweepTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"param", r.param},
                    {"P_A", finite_or_null(r.p_a)},
                    {"P_B", finite_or_null(r.p_b)},
                    {"abs_X", finite_or_null(r.abs_x)},
                    {"concurrence", finite_or_null(r.concurrence)},
                    {"diverged", r.diverged()},
                    {"quadrature_failure", r.status == RowStatus::QuadratureFailure}});
  }
  json j{{"version", CONICAL_VERSION},
         {"alignment", std::string(to_string(table.alignment))},
         {"axis", std::string(to_string(spec.axis))},
         {"nu", spec.nu},
         {"l", spec.l},
         {"d", spec.d},
         {"gap", spec.gap},
         {"rows", rows}};
  if (spec.d_over_l) j["d_over_l"] = *spec.d_over_l;
  return j;
}

void write_dmax_csv(std::ostream& os, const std::vector<DmaxRow>& rows) {
  os << version_line() << '\n' << "param,d_max,flat_d_max,status\n";
  for (const auto& r : rows) {
    os << format_number(r.l) << ',' << (r.result ? format_number(r.result->d_max) : "") << ','
       << format_number(r.flat_d_max) << ',' << r.status << '\n';
  }
}

json dmax_json(const std::vector<DmaxRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row{{"l", r.l},
             {"d_max", r.result ? json(r.result->d_max) : json(nullptr)},
             {"flat_d_max", r.flat_d_max},
             {"status", r.status}};
    if (r.result) row["divergent_points"] = r.result->divergent_points;
    out.push_back(row);
  }
  return {{"version", CONICAL_VERSION}, {"rows", out}};
}

json evaluation_json(const PairEvaluation& ev) {
  json j{{"version", CONICAL_VERSION},
         {"alignment", std::string(to_string(ev.config.alignment))},
         {"nu", ev.nu},
         {"l", ev.config.l},
         {"d", ev.config.d},
         {"gap", ev.config.gap},
         {"P_A", ev.result.p_a},
         {"P_B", ev.result.p_b},
         {"abs_X", finite_or_null(ev.result.abs_x)},
         {"concurrence", finite_or_null(ev.result.concurrence)},
         {"diverged", ev.result.diverged}};
  json breakdown{{"P_A", response_json(ev.responses.a)}, {"P_B", response_json(ev.responses.b)}};
  if (ev.correlation) {
    json images = json::array();
    for (const auto& im : ev.correlation->images) {
      images.push_back({{"m", im.m},
                        {"weight", im.weight},
                        {"z", im.z},
                        {"re", im.value.real()},
                        {"im", im.value.imag()}});
    }
    breakdown["X"] = {{"flat", complex_json(ev.correlation->x_flat)},
                      {"images", complex_json(ev.correlation->x_images)},
                      {"integral", complex_json(ev.correlation->x_integral)},
                      {"total", complex_json(ev.correlation->total)},
                      {"image_terms", images}};
  }
  j["breakdown"] = breakdown;
  return j;
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

json reports_json(const VerificationSummary& summary) {
  json rows = json::array();
  for (const auto& r : summary.reports) {
    rows.push_back({{"quantity", r.quantity},
                    {"production", complex_json(r.production)},
                    {"oracle", complex_json(r.oracle)},
                    {"abs_deviation", r.abs_deviation},
                    {"rel_deviation", r.rel_deviation},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass}});
  }
  return {{"version", CONICAL_VERSION}, {"all_pass", summary.all_pass()}, {"reports", rows}};
}

void write_reports_table(std::ostream& os, const VerificationSummary& summary) {
  char buf[320];
  for (const auto& r : summary.reports) {
    std::snprintf(buf, sizeof buf, "%-4s  %-58s  rel %.3e  tol %.0e\n", r.pass ? "PASS" : "FAIL",
                  r.quantity.c_str(), r.rel_deviation, r.tolerance);
    os << buf;
  }
  const auto failures = summary.failures();
  os << summary.reports.size() - failures.size() << '/' << summary.reports.size() << " passed\n";
  for (const auto& f : failures) os << "failed: " << f.quantity << '\n';
}

}  // namespace conical::cli
