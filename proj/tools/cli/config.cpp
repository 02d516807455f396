#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "polarmap/core/errors.hpp"

namespace polarmap::cli {

void check(const RunConfig& cfg) {
  if (cfg.n_z < 4 || cfg.n_t < 4) throw ConfigError("grid resolutions must be at least 4");
  if (cfg.tol && (!std::isfinite(*cfg.tol) || *cfg.tol < 0.0)) throw ConfigError("tolerance must be non-negative");
  for (const auto& v : cfg.validators)
    if (std::find(validator_names().begin(), validator_names().end(), v) == validator_names().end())
      throw ConfigError("unknown validator: " + v);
}

std::pair<int, int> parse_grid(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ConfigError("grid must be NZ,NT");
  try {
    std::size_t a = 0;
    std::size_t b = 0;
    const int nz = std::stoi(text.substr(0, comma), &a);
    const int nt = std::stoi(text.substr(comma + 1), &b);
    if (a != comma || b != text.size() - comma - 1) throw ConfigError("grid must be NZ,NT");
    return {nz, nt};
  } catch (const std::logic_error&) {
    throw ConfigError("grid must be NZ,NT");
  }
}

std::vector<std::string> parse_validators(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string name = text.substr(start, end - start);
    if (name == "all") return {};
    if (!name.empty()) out.push_back(name);
    start = end + 1;
  }
  if (out.empty()) throw ConfigError("empty validator list");
  return out;
}

namespace {

Rational to_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const GeometryError& e) {
      throw ConfigError(e.what());
    }
  }
  if (v.is_number_float()) {
    // Integral floats such as 2.0 are accepted; other decimals are not exact.
    const double d = v.get<double>();
    if (d == std::floor(d) && std::abs(d) < 1e15) return Rational(static_cast<long long>(d));
    throw ConfigError("non-integer coefficients must be given as rational strings such as \"5/4\"");
  }
  throw ConfigError("bad coefficient");
}

GaussRational to_coefficient(const nlohmann::json& v) {
  if (v.is_array()) {
    if (v.size() != 2) throw ConfigError("complex coefficients are [re, im]");
    return {to_rational(v[0]), to_rational(v[1])};
  }
  return {to_rational(v)};
}

Poly to_poly(const nlohmann::json& v) {
  if (!v.is_array()) throw ConfigError("coefficient lists must be arrays (ascending powers)");
  std::vector<GaussRational> c;
  for (const auto& x : v) c.push_back(to_coefficient(x));
  return Poly(std::move(c));
}

RationalFn to_function(const nlohmann::json& v) {
  if (v.is_array()) return RationalFn(to_poly(v));
  if (!v.is_object() || !v.contains("num")) throw ConfigError("a function is a coefficient list or {num, den}");
  const Poly num = to_poly(v.at("num"));
  const Poly den = v.contains("den") ? to_poly(v.at("den")) : Poly::constant(1);
  if (den.is_zero()) throw ConfigError("zero denominator");
  return RationalFn(num, den);
}

}  // namespace

PresetParams parse_params(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("parameter file must hold a JSON object");
  PresetParams p;
  if (j.contains("phi") != j.contains("psi")) throw ConfigError("phi and psi must be given together");
  if (j.contains("phi")) p.pair = MeromorphicPair{to_function(j.at("phi")), to_function(j.at("psi"))};
  for (const auto& [key, value] : j.items()) {
    if (key == "phi" || key == "psi") continue;
    if (!value.is_number()) throw ConfigError("parameter " + key + " must be a number");
    p.scalars[key] = value.get<double>();
  }
  return p;
}

PresetParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read parameter file " + path);
  try {
    return parse_params(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad parameter file: ") + e.what());
  }
}

}  // namespace polarmap::cli
