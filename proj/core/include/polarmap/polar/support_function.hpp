#pragma once

#include <functional>
#include <optional>
#include <string>

#include "polarmap/core/jet.hpp"

namespace polarmap {

/// Support function of a Euclidean polar map with exact coordinate jets.
/// The evaluator receives the base surface jet at the same point.
class SupportFunction {
 public:
  using EvalFn = std::function<ScalarJet2(const Vec2& z, const Jet2Point& base)>;

  /// gamma = <g, alpha> for a constant vector alpha.
  static SupportFunction linear(const Vec& alpha);
  static SupportFunction zero();
  static SupportFunction custom(std::string name, EvalFn eval);

  ScalarJet2 eval(const Vec2& z, const Jet2Point& base) const { return eval_(z, base); }
  const std::string& name() const { return name_; }
  const std::optional<Vec>& alpha() const { return alpha_; }

 private:
  SupportFunction(std::string name, EvalFn eval, std::optional<Vec> alpha)
      : name_(std::move(name)), eval_(std::move(eval)), alpha_(std::move(alpha)) {}

  std::string name_;
  EvalFn eval_;
  std::optional<Vec> alpha_;
};

}  // namespace polarmap
