#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace conical::cli {

class UnknownPreset : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The preset manifest compiled into the binary.
const nlohmann::json& figure_manifest();
std::vector<std::string> figure_names();

/// Writes one CSV per curve plus <name>_manifest.json into `dir` and
/// returns the paths written, manifest last.
std::vector<std::filesystem::path> run_figure(const std::string& name,
                                              const std::filesystem::path& dir, int threads);

}  // namespace conical::cli
