#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polarmap/gallery/presets.hpp"

namespace polarmap::cli {

/// Bad command line or parameter file; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Output could not be written; exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& validator_names() {
  static const std::vector<std::string> names{"surface", "curvature", "metric",  "quadric",
                                              "regularity", "structure", "ruling", "locus"};
  return names;
}

struct RunConfig {
  std::string example;
  std::string params_file;
  PresetParams params;
  int n_z = 24;
  int n_t = 8;
  std::optional<double> tol;
  std::string out;
  std::vector<std::string> validators;   // empty means every applicable one
  bool stereo = false;
};

/// Checks resolutions and tolerance; throws ConfigError.
void check(const RunConfig& cfg);

/// Parses "NZ,NT".
std::pair<int, int> parse_grid(const std::string& text);
/// Parses a comma-separated validator list; "all" selects everything.
std::vector<std::string> parse_validators(const std::string& text);

/// {"phi": {"num": [...], "den": [...]}, "psi": ..., "distance": 0.5}; a
/// coefficient is a number, a rational string such as "-5/4", or [re, im].
PresetParams parse_params(const nlohmann::json& j);
PresetParams load_params(const std::string& path);

}  // namespace polarmap::cli
