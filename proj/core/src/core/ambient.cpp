#include "polarmap/core/ambient.hpp"

#include <cmath>

#include "polarmap/core/errors.hpp"

namespace polarmap {

AmbientSpace::AmbientSpace(std::string name, int dimension, int s, std::optional<double> quadric, bool upper)
    : name_(std::move(name)), dimension_(dimension), s_(s), quadric_(quadric), upper_sheet_(upper) {
  require(dimension >= 3 && dimension <= 5, ErrorKind::ContractViolation, "ambient dimension must be 3..5");
  require(s == 0 || (s == 1 && dimension == 5), ErrorKind::ContractViolation,
          "index 1 is only supported in dimension 5");
}

AmbientSpace AmbientSpace::euclidean(int dimension) {
  return AmbientSpace("R" + std::to_string(dimension), dimension, 0, std::nullopt, false);
}
AmbientSpace AmbientSpace::sphere(int dimension) {
  return AmbientSpace("S" + std::to_string(dimension - 1), dimension, 0, 1.0, false);
}
AmbientSpace AmbientSpace::hyperbolic4() { return AmbientSpace("H4", 5, 1, -1.0, true); }
AmbientSpace AmbientSpace::de_sitter4() { return AmbientSpace("S4_1", 5, 1, 1.0, false); }
AmbientSpace AmbientSpace::minkowski5() { return AmbientSpace("R5_1", 5, 1, std::nullopt, false); }

double AmbientSpace::curvature() const {
  if (!quadric_) return 0.0;
  // S^n: <x,x> = 1 gives c = 1; H^4: <x,x>_1 = -1 gives c = -1.
  require(!(s_ == 1 && *quadric_ > 0), ErrorKind::ContractViolation, "de Sitter space is not a Riemannian space form");
  return *quadric_;
}

double AmbientSpace::quadric_residual(const Vec& x) const {
  if (!quadric_) return 0.0;
  double r = std::abs(inner(x, x, *this) - *quadric_);
  if (upper_sheet_ && x[0] <= 0.0) r += 1.0 + std::abs(x[0]);
  return r;
}

double inner(const Vec& v, const Vec& w, int s) {
  require(v.size() == w.size(), ErrorKind::ContractViolation, "inner: dimension mismatch");
  double r = v.dot(w);
  if (s == 1) r -= 2.0 * v[0] * w[0];
  return r;
}

double inner(const Vec& v, const Vec& w, const AmbientSpace& space) {
  require(v.size() == space.dimension() && w.size() == space.dimension(), ErrorKind::ContractViolation,
          "inner: vector does not match the ambient dimension");
  return inner(v, w, space.signature_index());
}

Vec raise(const Vec& v, int s) {
  Vec r = v;
  if (s == 1) r[0] = -r[0];
  return r;
}

}  // namespace polarmap
