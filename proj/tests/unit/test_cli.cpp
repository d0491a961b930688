#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "doctest.h"
#include "figures.hpp"
#include "json.hpp"
#include "output.hpp"

using namespace conical;
using namespace conical::cli;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args, const ProductionPaths& paths = production_paths()) {
  args.insert(args.begin(), "conical-harvest");
  std::ostringstream out, err;
  const int code = run(args, out, err, paths);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("conical_cli_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}
}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(version_line().rfind("# conical-harvest v", 0) == 0);
}

TEST_CASE("thread precedence") {
  CHECK(resolve_threads(3, "5") == 3);
  CHECK(resolve_threads(std::nullopt, "5") == 5);
  CHECK(resolve_threads(std::nullopt, nullptr) == 0);
  CHECK_THROWS_AS(resolve_threads(std::nullopt, "many"), UsageError);
}

TEST_CASE("parse fills the run configuration") {
  std::ostringstream sink;
  const auto c = parse({"conical-harvest", "--alignment", "opposite", "--nu", "3", "--l", "0.2",
                        "--d", "0.6", "sweep", "--axis", "l", "--lo", "0.1", "--hi", "0.3",
                        "--d-over-l", "3"},
                       sink);
  REQUIRE(c.has_value());
  CHECK(c->command == Command::Sweep);
  CHECK(c->alignment == Alignment::OrthogonalOppositeSides);
  CHECK(c->axis == SweepAxis::L);
  CHECK(c->d_over_l == 3.0);
  CHECK(c->nu == 3.0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_args({"--nu", "0.5", "compute"}).code == kExitUsage);
  CHECK(run_args({"--alignment", "opposite", "--l", "0.5", "--d", "0.5", "compute"}).code == kExitUsage);
  CHECK(run_args({"--alignment", "sideways", "compute"}).code == kExitUsage);
  CHECK(run_args({"compute", "--bogus"}).code == kExitUsage);
  CHECK(run_args({}).code == kExitUsage);
  CHECK(run_args({"figure", "nope"}).code == kExitUsage);
  CHECK(run_args({"--lo", "2", "--hi", "1", "sweep"}).code == kExitUsage);
  const auto r = run_args({"--nu", "0.5", "compute"});
  CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("config file supplies defaults and rejects unknown keys") {
  const auto dir = scratch("config");
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.toml";
  std::ofstream(good) << "alignment = \"orthogonal\"\nnu = 3\nl = 0.2\nd = 0.4\n";
  auto r = run_args({"--config", good.string(), "compute"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["nu"] == 3.0);
  r = run_args({"--config", good.string(), "--nu", "4", "compute"});
  CHECK(nlohmann::json::parse(r.out)["nu"] == 4.0);
  const auto bad = dir / "bad.toml";
  std::ofstream(bad) << "nu = 3\nfrobnicate = 1\n";
  CHECK(run_args({"--config", bad.string(), "compute"}).code == kExitUsage);
  std::filesystem::remove_all(dir);
}

TEST_CASE("compute prints a JSON breakdown") {
  const auto r = run_args({"--alignment", "parallel", "--nu", "2.5", "--l", "1", "--d", "1", "compute"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.contains("P_A"));
  CHECK(j.contains("concurrence"));
}

TEST_CASE("divergent compute exits 1 with a structured error") {
  const auto r = run_args({"--alignment", "opposite", "--nu", "4", "--l", "1", "--d", "2", "compute"});
  CHECK(r.code == kExitFailure);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["error"]["kind"] == "divergent_overlap");
  CHECK(j["error"]["image_index"] == 2);
}

TEST_CASE("sweep CSV layout") {
  const auto r = run_args({"--alignment", "flat", "--lo", "0.5", "--hi", "2", "--n", "4", "sweep"});
  REQUIRE(r.code == kExitOk);
  const auto v = lines(r.out);
  REQUIRE(v.size() == 6);
  CHECK(v[0] == version_line());
  CHECK(v[1] == "param,P_A_per_lambda2,P_B_per_lambda2,abs_X_per_lambda2,concurrence_per_lambda2,diverged");
  CHECK(v[2].rfind("0.5,", 0) == 0);
  CHECK(v[2].substr(v[2].size() - 2) == ",0");
}

TEST_CASE("divergent sweep rows carry the flag") {
  const auto r = run_args({"--alignment", "opposite", "--nu", "4", "--axis", "l", "--d-over-l", "2",
                           "--lo", "0.1", "--hi", "0.5", "--n", "3", "sweep"});
  REQUIRE(r.code == kExitOk);
  const auto v = lines(r.out);
  REQUIRE(v.size() == 5);
  CHECK(v[2].find("inf") != std::string::npos);
  CHECK(v[2].substr(v[2].size() - 2) == ",1");
}

TEST_CASE("output does not depend on the thread count") {
  const std::vector<std::string> base{"--alignment", "orthogonal", "--nu", "3.5", "--l", "0.2",
                                      "--lo", "0.05", "--hi", "2", "--n", "16", "sweep"};
  auto with = [&](const std::string& t) {
    auto a = base;
    a.insert(a.begin(), {"--threads", t});
    return run_args(a).out;
  };
  CHECK(with("1") == with("3"));
  const std::vector<std::string> dmax{"--alignment", "parallel", "--nu", "3", "--lo", "0.1",
                                      "--hi", "1", "--n", "3", "--grid-n", "64", "dmax"};
  auto dmax_with = [&](const std::string& t) {
    auto a = dmax;
    a.insert(a.begin(), {"--threads", t});
    return run_args(a).out;
  };
  const auto one = dmax_with("1");
  CHECK(one == dmax_with("2"));
  CHECK(lines(one)[1] == "param,d_max,flat_d_max,status");
}

TEST_CASE("environment thread count is honoured") {
  ::setenv(kThreadsEnv, "2", 1);
  std::ostringstream sink;
  auto c = parse({"conical-harvest", "verify"}, sink);
  CHECK(c->threads == 2);
  c = parse({"conical-harvest", "--threads", "1", "verify"}, sink);
  CHECK(c->threads == 1);
  ::setenv(kThreadsEnv, "x", 1);
  CHECK(run_args({"verify"}).code == kExitUsage);
  ::unsetenv(kThreadsEnv);
}

TEST_CASE("nuscan reports the extremum") {
  const auto r = run_args({"--alignment", "parallel", "--l", "3", "--d", "0.1", "--lo", "6", "--hi", "12",
                           "--objective", "xminusp", "nuscan"});
  REQUIRE(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["nu_star"].get<double>() == doctest::Approx(9.2201).epsilon(1e-4));
}

TEST_CASE("figure presets") {
  const auto names = figure_names();
  CHECK(names.size() >= 20);
  const auto dir = scratch("figure");
  const auto r = run_args({"--out", dir.string(), "figure", "fig3a"});
  REQUIRE(r.code == kExitOk);
  const auto files = lines(r.out);
  REQUIRE(files.size() >= 2);
  for (const auto& f : files) CHECK(std::filesystem::exists(f));
  CHECK(files.back().find("fig3a_manifest.json") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("verify exit codes") {
  CHECK(run_args({"--profile", "fast", "verify"}).code == kExitOk);
  auto paths = production_paths();
  paths.p_flat = [](double gap) { return p_flat(gap) * (1.0 + 1e-5); };
  const auto r = run_args({"--profile", "fast", "verify"}, paths);
  CHECK(r.code == kExitFailure);
  CHECK(r.out.find("failed:") != std::string::npos);
}
