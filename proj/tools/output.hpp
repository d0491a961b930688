#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "conical/entanglement.hpp"
#include "conical/sweep.hpp"
#include "conical/verification.hpp"
#include "json.hpp"

namespace conical::cli {

std::string version_line();  ///< "# conical-harvest v<semver>"

/// %.12g, with ±inf spelled "inf"/"-inf". NaN never reaches output.
std::string format_number(double x);

void write_sweep_csv(std::ostream& os, const SweepTable& table);
nlohmann::json sweep_json(const SweepSpec& spec, const SweepTable& table);

struct DmaxRow {
  double l = 0.0;
  std::optional<DmaxResult> result;
  double flat_d_max = 0.0;
  std::string status;  ///< ok | at_upper_bound | none
};
void write_dmax_csv(std::ostream& os, const std::vector<DmaxRow>& rows);
nlohmann::json dmax_json(const std::vector<DmaxRow>& rows);

nlohmann::json evaluation_json(const PairEvaluation& ev);
nlohmann::json error_json(const std::string& kind, const std::string& message);

nlohmann::json reports_json(const VerificationSummary& summary);
void write_reports_table(std::ostream& os, const VerificationSummary& summary);

}  // namespace conical::cli
