#pragma once

// Minimal surfaces in R^3 in isothermal coordinates, and the constructions
// over them: cylinders in R^4 and Euclidean polar maps over their Gauss maps.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "polarmap/gallery/exact.hpp"
#include "polarmap/hypersurface/hypersurface.hpp"
#include "polarmap/polar/polar_map.hpp"
#include "polarmap/surface/branched_surface.hpp"

namespace polarmap {

struct WeierstrassData {
  using Map3 = std::function<std::array<D3x2, 3>(const D3x2&, const D3x2&)>;
  using Map2x3 = std::function<std::array<D2x3, 3>(const D2x3&, const D2x3&)>;

  std::string name;
  Map3 x3;        // third-order jets in (x, y)
  Map2x3 x2x3;    // second-order jets inside a three-parameter map
  Domain domain = Domain::box(Vec2(-1, -1), Vec2(1, 1));
  /// Planar points, i.e. branch points of the Gauss map, with their orders.
  std::vector<BranchPoint> planar_points;
  bool flat = false;

  template <class F>
  static WeierstrassData make(std::string name, F f, Domain domain, std::vector<BranchPoint> planar = {},
                              bool flat = false) {
    WeierstrassData d;
    d.name = std::move(name);
    d.x3 = [f](const D3x2& x, const D3x2& y) { return f(x, y); };
    d.x2x3 = [f](const D2x3& x, const D2x3& y) { return f(x, y); };
    d.domain = std::move(domain);
    d.planar_points = std::move(planar);
    d.flat = flat;
    return d;
  }

  /// (cosh x cos y, cosh x sin y, x).
  static WeierstrassData catenoid(const Domain& domain);
  /// (sinh x cos y, sinh x sin y, y).
  static WeierstrassData helicoid(const Domain& domain);
  /// The plane (x, y, 0).
  static WeierstrassData plane(const Domain& domain);
  /// Re of the integrals of (f(1 - g^2)/2, i f(1 + g^2)/2, f g) dz for
  /// polynomial f, g; planar points are the zeros of g'.
  static WeierstrassData polynomial(std::string name, const Poly& f, const Poly& g, const Domain& domain);
  /// f = 1, g = z.
  static WeierstrassData enneper(const Domain& domain);
};

/// X itself as a conformal minimal surface in R^3.
BranchedSurface surface_of(const WeierstrassData& data);

/// The Gauss map (N, 0) as a branched minimal surface in S^3 (inside the
/// great S^2), with explicit normal e4. Throws DegenerateSurface for a plane.
BranchedSurface gauss_image(const WeierstrassData& data);

/// gamma = <X, N> as a function on the Gauss image.
SupportFunction weierstrass_support(const WeierstrassData& data);

/// (X(x, y), t) in R^4 over the data's domain box times [t_lo, t_hi].
Hypersurface3 cylinder_over_r3_minimal(const WeierstrassData& data, double t_lo = -1.0, double t_hi = 1.0);

/// The same cylinder as the Euclidean polar map over the Gauss image.
PolarMap cylinder_polar_map(const WeierstrassData& data, const Tolerances& tol = {});

}  // namespace polarmap
