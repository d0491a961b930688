#include "figures.hpp"

#include <cstdio>
#include <fstream>

#include "conical/errors.hpp"
#include "output.hpp"

namespace conical::cli {

using nlohmann::json;

namespace {

const char* const kManifestText =
#include "figure_manifest.inc"
    ;

std::string tag(const char* key, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "_%s%g", key, v);
  return buf;
}

double number(const json& curve, const json& preset, const char* key, double fallback) {
  if (curve.contains(key)) return curve.at(key).get<double>();
  if (preset.contains(key)) return preset.at(key).get<double>();
  return fallback;
}

struct Curve {
  Alignment alignment;
  double nu, l, d, gap;
  std::optional<double> d_over_l;
  std::string file;
};

Curve resolve(const std::string& name, const json& preset, const json& c) {
  const auto alignment = parse_alignment(c.at("alignment").get<std::string>());
  if (!alignment) throw UnknownPreset("manifest: bad alignment in " + name);
  Curve out{*alignment, number(c, preset, "nu", 1.0), number(c, preset, "l", 0.0),
            number(c, preset, "d", 1.0), number(c, preset, "gap", 0.1), std::nullopt, {}};
  if (c.contains("d_over_l") || preset.contains("d_over_l")) {
    out.d_over_l = number(c, preset, "d_over_l", 2.0);
  }

  const std::string axis = preset.at("axis").get<std::string>();
  std::string file = name + "_" + std::string(to_string(out.alignment));
  if (axis != "nu") file += tag("nu", out.nu);
  if (axis != "l") file += tag("l", out.l);
  if (preset.at("kind") == "sweep" && axis != "d") {
    file += out.d_over_l ? tag("dl", *out.d_over_l) : tag("d", out.d);
  }
  if (axis != "gap") file += tag("gap", out.gap);
  char range[96];
  std::snprintf(range, sizeof range, "_%s%g-%g", axis.c_str(), preset.at("lo").get<double>(),
                preset.at("hi").get<double>());
  out.file = file + range + ".csv";
  return out;
}

void write_sweep_curve(const json& preset, const Curve& c, const std::filesystem::path& path,
                       int threads) {
  SweepSpec spec;
  spec.axis = *parse_sweep_axis(preset.at("axis").get<std::string>());
  spec.lo = preset.at("lo").get<double>();
  spec.hi = preset.at("hi").get<double>();
  spec.n = preset.at("n").get<int>();
  spec.spacing = preset.value("spacing", "lin") == "log" ? Spacing::Log : Spacing::Linear;
  spec.alignments = {c.alignment};
  spec.nu = c.nu;
  spec.l = c.l;
  spec.d = c.d;
  spec.gap = c.gap;
  spec.d_over_l = c.d_over_l;
  const auto tables = sweep(spec, threads);
  std::ofstream os(path);
  write_sweep_csv(os, tables.front());
}

void write_dmax_curve(const json& preset, const Curve& c, const std::filesystem::path& path,
                      int threads) {
  DmaxScan scan;
  scan.d_hi = preset.value("d_hi", scan.d_hi);
  scan.grid_n = preset.value("grid_n", scan.grid_n);
  scan.threads = threads;
  SweepSpec axis;
  axis.axis = SweepAxis::L;
  axis.lo = preset.at("lo").get<double>();
  axis.hi = preset.at("hi").get<double>();
  axis.n = preset.at("n").get<int>();
  const ConeParameter nu(c.nu);
  const double flat = d_max(Alignment::Flat, ConeParameter::flat(), 0.0, c.gap, scan)
                          .value_or(DmaxResult{})
                          .d_max;
  std::vector<DmaxRow> rows;
  for (double l : sweep_values(axis)) {
    DmaxRow row{l, std::nullopt, flat, "none"};
    if (c.alignment != Alignment::OrthogonalOppositeSides || 2.0 * l < scan.d_hi) {
      row.result = d_max(c.alignment, nu, l, c.gap, scan);
    }
    if (row.result) row.status = row.result->at_upper_bound ? "at_upper_bound" : "ok";
    rows.push_back(std::move(row));
  }
  std::ofstream os(path);
  write_dmax_csv(os, rows);
}

}  // namespace

const json& figure_manifest() {
  static const json manifest = json::parse(kManifestText);
  return manifest;
}

std::vector<std::string> figure_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : figure_manifest().at("presets").items()) names.push_back(name);
  return names;
}

std::vector<std::filesystem::path> run_figure(const std::string& name,
                                              const std::filesystem::path& dir, int threads) {
  const auto& presets = figure_manifest().at("presets");
  if (!presets.contains(name)) throw UnknownPreset("unknown figure preset '" + name + "'");
  const json& preset = presets.at(name);
  std::filesystem::create_directories(dir);

  std::vector<std::filesystem::path> written;
  json listing = json::array();
  for (const auto& raw : preset.at("curves")) {
    const Curve c = resolve(name, preset, raw);
    const auto path = dir / c.file;
    if (preset.at("kind") == "dmax") write_dmax_curve(preset, c, path, threads);
    else write_sweep_curve(preset, c, path, threads);
    written.push_back(path);
    json entry{{"file", c.file},  {"alignment", std::string(to_string(c.alignment))},
               {"nu", c.nu},      {"l", c.l},
               {"d", c.d},        {"gap", c.gap}};
    if (c.d_over_l) entry["d_over_l"] = *c.d_over_l;
    listing.push_back(entry);
  }

  const json out{{"version", CONICAL_VERSION},
                 {"manifest_version", figure_manifest().at("manifest_version")},
                 {"preset", name},
                 {"description", preset.at("description")},
                 {"kind", preset.at("kind")},
                 {"axis", preset.at("axis")},
                 {"lo", preset.at("lo")},
                 {"hi", preset.at("hi")},
                 {"n", preset.at("n")},
                 {"curves", listing}};
  const auto manifest_path = dir / (name + "_manifest.json");
  std::ofstream(manifest_path) << out.dump(2) << '\n';
  written.push_back(manifest_path);
  return written;
}

}  // namespace conical::cli
