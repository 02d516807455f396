#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"

namespace polarmap::cli {

struct Metric {
  std::string name;
  double max = 0.0;
  double median = 0.0;
  double threshold = 0.0;
  bool passed = true;
};

struct ValidatorResult {
  std::string name;
  std::string checks;   // the property being enforced
  bool passed = true;
  int samples = 0;
  int skipped = 0;
  std::vector<Metric> metrics;
  nlohmann::ordered_json findings = nlohmann::ordered_json::object();
};

bool applicable(const std::string& validator, const PresetInstance& inst);

/// Validators compare strictly (max < threshold), so a zero tolerance
/// override fails every one of them.
ValidatorResult run_validator(const std::string& validator, const PresetInstance& inst, const RunConfig& cfg);

/// max and median of the values against a threshold; an empty set has max 0.
Metric summarize(std::string name, std::vector<double> values, double threshold);

}  // namespace polarmap::cli
