#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "validators.hpp"

namespace polarmap::cli {

struct Report {
  std::string example;
  std::string space;
  RunConfig config;
  std::vector<ValidatorResult> results;

  bool passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Serializes with every double printed as %.17g; NaN and infinities become null.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace polarmap::cli
