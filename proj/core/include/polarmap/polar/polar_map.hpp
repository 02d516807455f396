#pragma once

#include <array>
#include <optional>
#include <vector>

#include "polarmap/hypersurface/hypersurface.hpp"
#include "polarmap/polar/support_function.hpp"
#include "polarmap/surface/analysis.hpp"

namespace polarmap {

enum class PolarKind { Euclidean, Spherical, Hyperbolic };

std::string_view to_string(PolarKind kind);

/// Gradient, Hessian (as an operator) and Laplacian of gamma w.r.t. the metric of g.
struct GammaDerivatives {
  double value = 0.0;
  Vec2 gradient = Vec2::Zero();   // coordinate components of grad gamma
  Mat2 hessian = Mat2::Zero();    // G^{-1} Hess(gamma)
  double laplacian = 0.0;
};

GammaDerivatives hessian_gamma(const BranchedSurface& g, const SupportFunction& gamma, const Vec2& z);

struct PolarOperatorSample {
  Vec2 z = Vec2::Zero();
  double t = 0.0;
  Mat2 op = Mat2::Zero();        // P (Euclidean) or A_w
  double det = 0.0;
  double scaled_det = 0.0;       // |z - z0|^{2m} det
  Vec2 omega = Vec2::Zero();     // omega or omega34 on (d_x, d_y)
};

/// Formula-route differential of the polar map at (z, t).
struct PolarDifferential {
  Vec psi;
  std::array<Vec, 3> dpsi;       // d_x, d_y, d_t
  Vec xi;                        // unit normal g(z)
  std::array<Vec, 3> dxi;
};

class PolarMap {
 public:
  /// Throws ConstructionError if g does not lie in S^3, InvalidSupportFunction
  /// if the Helmholtz residual fails on a probe grid.
  static PolarMap build_euclidean(BranchedSurface g, SupportFunction gamma, const Tolerances& tol = {});
  /// g must lie in S^4.
  static PolarMap build_spherical(BranchedSurface g, const Tolerances& tol = {});
  /// g must lie in S^4_1 with a timelike first normal (FrameError otherwise).
  static PolarMap build_hyperbolic(BranchedSurface g, const Tolerances& tol = {});

  PolarKind kind() const { return kind_; }
  const BranchedSurface& base() const { return base_; }
  const std::optional<SupportFunction>& support() const { return gamma_; }
  const AmbientSpace& target() const { return target_; }
  const Tolerances& tolerances() const { return tol_; }

  Vec value(const Vec2& z, double t) const;
  PolarDifferential differential(const Vec2& z, double t) const;
  PolarOperatorSample operator_sample(const Vec2& z, double t) const;

 private:
  PolarMap(PolarKind kind, BranchedSurface base, std::optional<SupportFunction> gamma, AmbientSpace target,
           const Tolerances& tol);

  struct Frame {
    std::vector<VJet<2>> eta;
  };
  Frame frame(const Vec2& z) const;

  PolarKind kind_;
  BranchedSurface base_;
  std::optional<SupportFunction> gamma_;
  AmbientSpace target_;
  Tolerances tol_;
};

/// P for a Euclidean polar map (ContractViolation for the other kinds).
PolarOperatorSample operator_P(const PolarMap& map, const Vec2& z, double t);
/// P or A_w depending on the kind.
PolarOperatorSample polar_operator(const PolarMap& map, const Vec2& z, double t);

enum class Regularity { Regular, Singular, NoLimit };
std::string_view to_string(Regularity r);

struct RegularityResult {
  Regularity verdict = Regularity::Regular;
  bool at_branch_point = false;
  double det = 0.0;      // det at regular base points
  double limit = 0.0;    // fitted limit of |z|^{2m} det at branch points
  double spread = 0.0;   // (max - min) / |mean| over rays
};

RegularityResult regularity_test(const PolarMap& map, const Vec2& z, double t);
/// Fitted limit of |z - z0|^{2m} det along rays approaching the branch point.
RegularityResult branch_limit(const PolarMap& map, const BranchPoint& bp, double t);

/// Exact zeros of det(t) on the fiber over z within [t_lo, t_hi], ascending.
std::vector<double> singular_parameters(const PolarMap& map, const Vec2& z, double t_lo, double t_hi);

struct InducedMetric {
  Mat3 formula;       // -det <,>_g + (dt + omega)^2
  Mat3 gram;          // Gram matrix of finite-difference dPsi
  Mat3 squared;       // <P^2 ., .>_g + (dt + omega)^2, before the trace-free reduction
  double relative_error = 0.0;
};

/// Throws SingularPoint at singular points.
InducedMetric induced_metric(const PolarMap& map, const Vec2& z, double t);

struct PrincipalCurvatures {
  std::array<double, 3> k{};   // descending, from the shape operator of Psi w.r.t. xi = g
  double k1_formula = 0.0;     // 1 / sqrt(-det)
};

PrincipalCurvatures principal_curvatures(const PolarMap& map, const Vec2& z, double t);

/// The polar map as a generic hypersurface over box = (x, y, t).
Hypersurface3 as_hypersurface(const PolarMap& map, const ParamBox& box);

}  // namespace polarmap
