#pragma once

// Flat and equidistant level hypersurfaces of H^4 in the hyperboloid model,
// and hyperbolic cylinders over minimal surfaces inside them.

#include <array>
#include <cmath>

#include "polarmap/gallery/weierstrass.hpp"

namespace polarmap {

enum class ChartKind { Horosphere, Equidistant };

/// A level set {<x, covector> = level} of H^4 with an isometric chart from
/// R^3 (horosphere) or the Poincare ball (equidistant, scaled H^3).
class ModelChart {
 public:
  /// <x, e1 + e2> = -1, chart u -> (1 + |u|^2/2, |u|^2/2, u).
  static ModelChart horosphere();
  /// <x, e5> = sinh(distance), chart from the unit ball.
  static ModelChart equidistant(double distance);

  ChartKind kind() const { return kind_; }
  const Vec& covector() const { return covector_; }
  double level() const { return level_; }
  double distance() const { return distance_; }

  template <class S>
  std::array<S, 5> point(const std::array<S, 3>& u) const {
    const S r2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    if (kind_ == ChartKind::Horosphere) {
      const S s = 0.5 * r2;
      return {1.0 + s, s, u[0], u[1], u[2]};
    }
    const S inv = 1.0 / (1.0 - r2);
    const double c = std::cosh(distance_);
    return {c * (1.0 + r2) * inv, 2.0 * c * u[0] * inv, 2.0 * c * u[1] * inv, 2.0 * c * u[2] * inv,
            S(std::sinh(distance_))};
  }

  /// Unit normal of the level set in H^4.
  template <class S>
  std::array<S, 5> normal(const std::array<S, 3>& u) const {
    const S r2 = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    if (kind_ == ChartKind::Horosphere) {
      const S s = 0.5 * r2;
      return {s, s - 1.0, u[0], u[1], u[2]};
    }
    const S inv = 1.0 / (1.0 - r2);
    const double sh = std::sinh(distance_);
    return {sh * (1.0 + r2) * inv, 2.0 * sh * u[0] * inv, 2.0 * sh * u[1] * inv, 2.0 * sh * u[2] * inv,
            S(std::cosh(distance_))};
  }

 private:
  ChartKind kind_ = ChartKind::Horosphere;
  Vec covector_;
  double level_ = -1.0;
  double distance_ = 0.0;
};

/// cosh t h + sinh t eta for h = chart(X). Only the flat datum is accepted
/// in an equidistant chart (Unsupported otherwise); ConstructionError if the
/// chart leaves the upper sheet.
Hypersurface3 hyperbolic_cylinder(const ModelChart& chart, const WeierstrassData& data, double t_lo = -1.0,
                                  double t_hi = 1.0);

/// The unit normal of h = chart(X) inside the level set, as a spacelike
/// surface in de Sitter space with normal frame (h, eta).
BranchedSurface level_set_normal_surface(const ModelChart& chart, const WeierstrassData& data);

/// The hyperbolic cylinder rebuilt as the hyperbolic polar map over
/// level_set_normal_surface.
PolarMap hyperbolic_cylinder_polar_map(const ModelChart& chart, const WeierstrassData& data,
                                       const Tolerances& tol = {});

}  // namespace polarmap
