#include "polarmap/polar/support_function.hpp"

namespace polarmap {

SupportFunction SupportFunction::linear(const Vec& alpha) {
  auto eval = [alpha](const Vec2&, const Jet2Point& g) {
    ScalarJet2 s;
    s.v = g.value.dot(alpha);
    s.d = Vec2(g.d1[0].dot(alpha), g.d1[1].dot(alpha));
    s.dd(0, 0) = g.d2[0].dot(alpha);
    s.dd(0, 1) = s.dd(1, 0) = g.d2[1].dot(alpha);
    s.dd(1, 1) = g.d2[2].dot(alpha);
    return s;
  };
  return SupportFunction("linear", eval, alpha);
}

SupportFunction SupportFunction::zero() {
  return SupportFunction("zero", [](const Vec2&, const Jet2Point&) { return ScalarJet2{}; }, std::nullopt);
}

SupportFunction SupportFunction::custom(std::string name, EvalFn eval) {
  return SupportFunction(std::move(name), std::move(eval), std::nullopt);
}

}  // namespace polarmap
