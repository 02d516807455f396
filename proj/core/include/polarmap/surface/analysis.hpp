#pragma once

#include <ostream>
#include <vector>

#include "polarmap/surface/branched_surface.hpp"

namespace polarmap {

struct ConformalFactor {
  double E = 0.0;
  double residual = 0.0;  // max(|<gx,gx> - <gy,gy>|, |<gx,gy>|)
};

struct NormalFrame {
  std::vector<VJet<2>> eta;        // members with first derivatives
  std::vector<double> norm_sign;   // <eta_i, eta_i>_s, -1 flags the timelike member
};

enum class FrameRoute { Exact, FiniteDifference };

ConformalFactor conformal_factor(const BranchedSurface& surface, const Vec2& z);

/// Induced metric (first fundamental form) in the coordinate frame.
Mat2 first_fundamental_form(const Jet2Point& j, const AmbientSpace& space);

/// Regression slope/2 of log E against log |z - z0| over the configured annulus.
double branch_order_estimate(const BranchedSurface& surface, const Vec2& z0, const Tolerances& tol = {});

/// E / |z - z0|^{2m} for the nearest declared branch point.
double conformal_core(const BranchedSurface& surface, const Vec2& z);

/// A_w = G^{-1} II_w with (II_w)_ij = <d_i d_j g, w>_s.
Mat2 shape_operator(const BranchedSurface& surface, const Vec2& z, const Vec& w);
Mat2 shape_operator(const Jet2Point& j, const Vec& w, const AmbientSpace& space);

/// Orthonormal normal frame. Uses the surface's explicit frame when present,
/// otherwise the oriented cross product in codimension one and signature-aware
/// Gram-Schmidt from the fixed seeds above that, differentiated exactly.
NormalFrame normal_frame(const BranchedSurface& surface, const Vec2& z, const Tolerances& tol = {});

/// omega34(X) = <d eta3(X), eta4>_s.
double connection_form_34(const BranchedSurface& surface, const Vec2& z, const Vec2& X,
                          FrameRoute route = FrameRoute::Exact, const Tolerances& tol = {});
/// <d eta_a(X), eta_b>_s for arbitrary members, finite-difference route.
double connection_form_fd(const BranchedSurface& surface, const Vec2& z, const Vec2& X, int a, int b,
                          const Tolerances& tol = {});

/// Norm of the mean curvature vector (Δg)^N / (2E) inside the target.
double minimality_residual(const BranchedSurface& surface, const Vec2& z);

/// |trace A_w| and the asymmetry of A_w in an orthonormal tangent frame.
struct ShapeCheck {
  double trace = 0.0;
  double asymmetry = 0.0;
};
ShapeCheck shape_operator_check(const BranchedSurface& surface, const Vec2& z, const Vec& w);

/// Difference of the semi-axes of the ellipse of curvature (0 for a circle or a point).
double ellipse_circularity(const BranchedSurface& surface, const Vec2& z, const Tolerances& tol = {});

/// Max deviation of the Gram matrix of (g, gx/sqrt E, gy/sqrt E, eta...) from
/// the signature diagonal.
double frame_gram_residual(const BranchedSurface& surface, const Vec2& z, const Tolerances& tol = {});

/// max(|<g,g> - c|, |<g, g_i>|) for quadric targets, 0 otherwise.
double quadric_residual(const BranchedSurface& surface, const Vec2& z);

/// CSV with columns x, y, g1..gn, E, conformality, minimality.
void write_surface_csv(const BranchedSurface& surface, const std::vector<Vec2>& samples, std::ostream& out);

}  // namespace polarmap
