#include "cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "conical/errors.hpp"
#include "figures.hpp"
#include "output.hpp"

namespace conical::cli {

using nlohmann::json;

namespace {

// Output goes to --out when given, else to the supplied stream.
class Sink {
public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback) : os_(&fallback) {
    if (path) {
      file_.open(*path);
      if (!file_) throw UsageError("--out: cannot open '" + *path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

private:
  std::ofstream file_;
  std::ostream* os_;
};

template <typename T>
CLI::Transformer choice(const std::map<std::string, T>& table) {
  return CLI::Transformer(table, CLI::ignore_case);
}

void check_axis(const RunConfig& c) {
  if (!(c.lo < c.hi)) throw UsageError("--lo/--hi: need lo < hi");
  if (c.n < 2 || c.n > 100000) throw UsageError("--n: must lie in [2, 100000]");
  if (c.spacing == Spacing::Log && !(c.lo > 0.0)) throw UsageError("--spacing log: need lo > 0");
}

void validate(const RunConfig& c) {
  try {
    (void)ConeParameter(c.nu);
    switch (c.command) {
      case Command::Compute:
        PairConfig{c.alignment, c.l, c.d, c.gap}.validate();
        break;
      case Command::Sweep: {
        check_axis(c);
        if (c.d_over_l && c.axis != SweepAxis::L) {
          throw UsageError("--d-over-l: only valid with --axis l");
        }
        SweepSpec spec;
        spec.axis = c.axis;
        spec.lo = c.lo;
        spec.hi = c.hi;
        spec.n = c.n;
        spec.spacing = c.spacing;
        spec.alignments = {c.alignment};
        spec.nu = c.nu;
        spec.l = c.l;
        spec.d = c.d;
        spec.gap = c.gap;
        spec.d_over_l = c.d_over_l;
        for (double v : sweep_values(spec)) {
          sweep_config(spec, c.alignment, v).validate();
          (void)sweep_nu(spec, v);
        }
        break;
      }
      case Command::Dmax:
        check_axis(c);
        if (c.lo < 0.0) throw UsageError("--lo: l must be >= 0");
        if (c.alignment == Alignment::OrthogonalOppositeSides && !(c.lo > 0.0)) {
          throw UsageError("--lo: opposite sides requires l > 0");
        }
        if (c.scan.grid_n < 2) throw UsageError("--grid-n: must be >= 2");
        break;
      case Command::Nuscan:
        check_axis(c);
        if (c.lo < ConeParameter::kMin || c.hi > ConeParameter::kMax) {
          throw UsageError("--lo/--hi: nu bracket must lie within [1, 64]");
        }
        PairConfig{c.alignment, c.l, c.d, c.gap}.validate();
        break;
      case Command::Figure:
      case Command::Verify:
        break;
    }
  } catch (const InvalidParameter& e) {
    throw UsageError(e.what());
  }
}

SweepSpec sweep_spec(const RunConfig& c) {
  SweepSpec spec;
  spec.axis = c.axis;
  spec.lo = c.lo;
  spec.hi = c.hi;
  spec.n = c.n;
  spec.spacing = c.spacing;
  spec.alignments = {c.alignment};
  spec.nu = c.nu;
  spec.l = c.l;
  spec.d = c.d;
  spec.gap = c.gap;
  spec.d_over_l = c.d_over_l;
  spec.tol = c.tol;
  return spec;
}

}  // namespace

int resolve_threads(std::optional<int> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value && *env_value) {
    char* end = nullptr;
    const long v = std::strtol(env_value, &end, 10);
    if (*end != '\0' || v < 0 || v > 4096) {
      throw UsageError(std::string(kThreadsEnv) + ": expected a non-negative integer, got '" +
                       env_value + "'");
    }
    return static_cast<int>(v);
  }
  return 0;
}

std::optional<RunConfig> parse(const std::vector<std::string>& args, std::ostream& out) {
  RunConfig c;
  CLI::App app{"Entanglement harvesting of two static detectors near a cosmic string",
               "conical-harvest"};
  app.set_version_flag("--version", std::string("conical-harvest ") + CONICAL_VERSION);
  app.set_config("--config", "", "file of `key = value` lines (# comments); flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  app.fallthrough();

  const std::map<std::string, Alignment> alignments{
      {"flat", Alignment::Flat},
      {"parallel", Alignment::ParallelSameSide},
      {"orthogonal", Alignment::OrthogonalSameSide},
      {"opposite", Alignment::OrthogonalOppositeSides},
      {"boundary-parallel", Alignment::BoundaryParallel},
      {"boundary-orthogonal", Alignment::BoundaryOrthogonal}};
  const std::map<std::string, SweepAxis> axes{
      {"d", SweepAxis::D}, {"l", SweepAxis::L}, {"nu", SweepAxis::Nu}, {"gap", SweepAxis::Gap}};
  const std::map<std::string, Spacing> spacings{{"lin", Spacing::Linear}, {"log", Spacing::Log}};
  const std::map<std::string, NuObjective> objectives{
      {"xminusp", NuObjective::CorrelationMinusResponse},
      {"concurrence", NuObjective::Concurrence}};
  const std::map<std::string, Format> formats{{"csv", Format::Csv}, {"json", Format::Json}};
  const std::map<std::string, VerifyProfile> profiles{{"default", VerifyProfile::Default},
                                                      {"fast", VerifyProfile::Fast}};

  std::optional<int> threads;
  std::optional<Format> format;
  std::optional<double> d_over_l;
  std::optional<std::string> out_path;

  std::string alignment_name = "parallel";
  std::string axis_name = "d";
  app.add_option("--alignment", alignment_name,
                 "flat|parallel|orthogonal|opposite|boundary-parallel|boundary-orthogonal")
      ->check(CLI::IsMember(alignments, CLI::ignore_case));
  app.add_option("--nu", c.nu, "deficit-angle parameter")->check(CLI::Range(1.0, 64.0));
  app.add_option("--gap", c.gap, "energy gap, units of 1/sigma")->check(CLI::NonNegativeNumber);
  app.add_option("--l", c.l, "detector-to-string distance, sigma units")->check(CLI::NonNegativeNumber);
  app.add_option("--d", c.d, "interdetector separation, sigma units")->check(CLI::PositiveNumber);
  app.add_option("--axis", axis_name, "sweep axis d|l|nu|gap")->check(CLI::IsMember(axes, CLI::ignore_case));
  app.add_option("--lo", c.lo, "axis lower bound");
  app.add_option("--hi", c.hi, "axis upper bound");
  app.add_option("--n", c.n, "axis points");
  app.add_option("--spacing", c.spacing, "lin|log")->transform(choice(spacings));
  app.add_option("--d-over-l", d_over_l, "l sweeps: tie d to l")->check(CLI::PositiveNumber);
  app.add_option("--objective", c.objective, "nuscan objective xminusp|concurrence")
      ->transform(choice(objectives));
  app.add_option("--d-hi", c.scan.d_hi, "d_max scan upper end")->check(CLI::PositiveNumber);
  app.add_option("--grid-n", c.scan.grid_n, "d_max scan points");
  app.add_option("--dmax-tol", c.scan.tol, "d_max root tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol", c.tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "output file (figure: directory)");
  app.add_option("--format", format, "csv|json")->transform(choice(formats));
  app.add_option("--profile", c.profile, "verify profile default|fast")->transform(choice(profiles));

  auto* compute = app.add_subcommand("compute", "single configuration, JSON breakdown");
  auto* sweep_cmd = app.add_subcommand("sweep", "one-parameter sweep");
  auto* dmax_cmd = app.add_subcommand("dmax", "d_max as a function of l");
  auto* nuscan = app.add_subcommand("nuscan", "extremize over nu");
  auto* figure = app.add_subcommand("figure", "write a figure preset's curves");
  figure->add_option("name", c.figure, "preset name")->required();
  auto* verify = app.add_subcommand("verify", "oracle and identity suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (*compute) c.command = Command::Compute;
  else if (*sweep_cmd) c.command = Command::Sweep;
  else if (*dmax_cmd) c.command = Command::Dmax;
  else if (*nuscan) c.command = Command::Nuscan;
  else if (*figure) c.command = Command::Figure;
  else if (*verify) c.command = Command::Verify;

  c.threads = resolve_threads(threads, std::getenv(kThreadsEnv));
  c.scan.threads = c.threads;
  c.format = format;
  c.d_over_l = d_over_l;
  c.alignment = alignments.at(CLI::detail::to_lower(alignment_name));
  c.axis = axes.at(CLI::detail::to_lower(axis_name));
  c.out = out_path;
  validate(c);
  return c;
}

int run_compute(const RunConfig& c, std::ostream& out) {
  const PairConfig config{c.alignment, c.l, c.d, c.gap};
  const auto ev = evaluate_pair(config, ConeParameter(c.nu), c.tol);
  Sink sink(c.out, out);
  if (ev.result.diverged) {
    json j = error_json("divergent_overlap", ev.result.divergence->message);
    j["error"]["image_index"] = ev.result.divergence->image_index;
    j["error"]["argument"] = ev.result.divergence->argument;
    j["P_A"] = ev.result.p_a;
    j["P_B"] = ev.result.p_b;
    sink.stream() << j.dump(2) << '\n';
    return kExitFailure;
  }
  if (c.format.value_or(Format::Json) == Format::Csv) {
    SweepTable table{c.alignment, {{c.d, ev.result.p_a, ev.result.p_b, ev.result.abs_x,
                                    ev.result.concurrence, RowStatus::Ok}}};
    write_sweep_csv(sink.stream(), table);
  } else {
    sink.stream() << evaluation_json(ev).dump(2) << '\n';
  }
  return kExitOk;
}

int run_sweep(const RunConfig& c, std::ostream& out) {
  const auto spec = sweep_spec(c);
  const auto tables = sweep(spec, c.threads);
  Sink sink(c.out, out);
  if (c.format.value_or(Format::Csv) == Format::Json) {
    sink.stream() << sweep_json(spec, tables.front()).dump(2) << '\n';
  } else {
    write_sweep_csv(sink.stream(), tables.front());
  }
  bool failed = false;
  for (const auto& r : tables.front().rows) failed |= r.status == RowStatus::QuadratureFailure;
  return failed ? kExitFailure : kExitOk;
}

int run_dmax(const RunConfig& c, std::ostream& out) {
  SweepSpec axis = sweep_spec(c);
  axis.axis = SweepAxis::L;
  axis.d_over_l.reset();
  const ConeParameter nu(c.nu);
  const double flat =
      d_max(Alignment::Flat, ConeParameter::flat(), 0.0, c.gap, c.scan).value_or(DmaxResult{}).d_max;
  std::vector<DmaxRow> rows;
  for (double l : sweep_values(axis)) {
    DmaxRow row{l, std::nullopt, flat, "none"};
    if (c.alignment != Alignment::OrthogonalOppositeSides || 2.0 * l < c.scan.d_hi) {
      row.result = d_max(c.alignment, nu, l, c.gap, c.scan);
    }
    if (row.result) row.status = row.result->at_upper_bound ? "at_upper_bound" : "ok";
    rows.push_back(std::move(row));
  }
  Sink sink(c.out, out);
  if (c.format.value_or(Format::Csv) == Format::Json) {
    sink.stream() << dmax_json(rows).dump(2) << '\n';
  } else {
    write_dmax_csv(sink.stream(), rows);
  }
  return kExitOk;
}

int run_nuscan(const RunConfig& c, std::ostream& out) {
  const PairConfig config{c.alignment, c.l, c.d, c.gap};
  const double nu_star = nu_extremum(c.objective, config, Bracket(c.lo, c.hi), c.scan.tol);
  const auto at = concurrence(config, ConeParameter(nu_star), c.tol);
  const double value = c.objective == NuObjective::Concurrence ? at.concurrence
                                                                : at.abs_x - at.geo_mean_p;
  const std::string objective =
      c.objective == NuObjective::Concurrence ? "concurrence" : "xminusp";
  Sink sink(c.out, out);
  if (c.format.value_or(Format::Json) == Format::Csv) {
    sink.stream() << version_line() << '\n'
                  << "objective,nu_star,objective_value\n"
                  << objective << ',' << format_number(nu_star) << ',' << format_number(value)
                  << '\n';
  } else {
    const json j{{"version", CONICAL_VERSION},
                 {"objective", objective},
                 {"bracket", {c.lo, c.hi}},
                 {"nu_star", nu_star},
                 {"objective_value", value},
                 {"P_A", at.p_a},
                 {"P_B", at.p_b},
                 {"abs_X", at.abs_x}};
    sink.stream() << j.dump(2) << '\n';
  }
  return kExitOk;
}

int run_figure(const RunConfig& c, std::ostream& out) {
  const auto files = cli::run_figure(c.figure, c.out.value_or("."), c.threads);
  for (const auto& f : files) out << f.string() << '\n';
  return kExitOk;
}

int run_verify(const RunConfig& c, const ProductionPaths& paths, std::ostream& out) {
  const auto summary = run_verification(c.profile, paths, c.threads);
  const bool json_out = c.format.value_or(Format::Csv) == Format::Json;
  if (c.out) {
    Sink sink(c.out, out);
    sink.stream() << reports_json(summary).dump(2) << '\n';
    write_reports_table(out, summary);
  } else if (json_out) {
    out << reports_json(summary).dump(2) << '\n';
  } else {
    write_reports_table(out, summary);
  }
  return summary.all_pass() ? kExitOk : kExitFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ProductionPaths& paths) {
  std::optional<RunConfig> config;
  try {
    config = parse(args, out);
    if (!config) return kExitOk;
    switch (config->command) {
      case Command::Compute: return run_compute(*config, out);
      case Command::Sweep: return run_sweep(*config, out);
      case Command::Dmax: return run_dmax(*config, out);
      case Command::Nuscan: return run_nuscan(*config, out);
      case Command::Figure: return run_figure(*config, out);
      case Command::Verify: return run_verify(*config, paths, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownPreset& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivergentOverlap& e) {
    json j = error_json("divergent_overlap", e.what());
    j["error"]["image_index"] = e.image_index();
    j["error"]["argument"] = e.argument();
    out << j.dump(2) << '\n';
    return kExitFailure;
  } catch (const ToleranceNotMet& e) {
    out << error_json("quadrature_failure", e.what()).dump(2) << '\n';
    return kExitFailure;
  } catch (const NoSignChange& e) {
    out << error_json("no_sign_change", e.what()).dump(2) << '\n';
    return kExitFailure;
  } catch (const NotUnimodal& e) {
    out << error_json("not_unimodal", e.what()).dump(2) << '\n';
    return kExitFailure;
  } catch (const Error& e) {
    out << error_json("computation_error", e.what()).dump(2) << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace conical::cli
