#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace polarmap::cli {

bool Report::passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["example"] = example;
  j["space"] = space;
  j["grid"] = {{"n_z", config.n_z}, {"n_t", config.n_t}};
  j["tol"] = config.tol ? nlohmann::ordered_json(*config.tol) : nlohmann::ordered_json(nullptr);
  j["params_file"] = config.params_file.empty() ? nlohmann::ordered_json(nullptr)
                                                : nlohmann::ordered_json(config.params_file);
  auto& vs = j["validators"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json v;
    v["name"] = r.name;
    v["checks"] = r.checks;
    v["passed"] = r.passed;
    v["samples"] = r.samples;
    v["skipped"] = r.skipped;
    auto& ms = v["metrics"] = nlohmann::ordered_json::array();
    for (const auto& m : r.metrics)
      ms.push_back({{"name", m.name},
                    {"max", m.max},
                    {"median", m.median},
                    {"threshold", m.threshold},
                    {"passed", m.passed}});
    v["findings"] = r.findings;
    vs.push_back(std::move(v));
  }
  j["passed"] = passed();
  return j;
}

namespace {

void write(const nlohmann::ordered_json& j, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += nlohmann::ordered_json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        write(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(e, indent, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  out += '\n';
  return out;
}

}  // namespace polarmap::cli
