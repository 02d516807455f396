#pragma once

#include <vector>

#include "polarmap/hypersurface/hypersurface.hpp"

namespace polarmap {

struct TracePoint {
  double s = 0.0;
  Vec3 p;
  Vec f;
  Vec xi;
};

struct NullityTrace {
  std::vector<TracePoint> points;
  bool truncated = false;   // the curve left the parameter box before reaching length L
};

/// Integrates the unit nullity field (RK4, sign-continued) from p0 for arclength L.
NullityTrace trace_nullity_geodesic(const Hypersurface3& h, const Vec3& p0, double length, double step,
                                    const Tolerances& tol = {});

/// max_s |xi(s) - xi(0)|.
double xi_variation(const NullityTrace& trace);

/// Distance between the traced image and cos/affine/cosh ruled prediction
/// f0 c(s) + df(e2)(p0) s(s) for the space form curvature.
double ruled_representation_residual(const Hypersurface3& h, const NullityTrace& trace, const Tolerances& tol = {});

/// |D_{e2}(df e2) + c f| at p (the image of the leaf is an ambient geodesic).
double ambient_geodesic_residual(const Hypersurface3& h, const Vec3& p, const Tolerances& tol = {});

struct LocusComponent {
  std::vector<Vec3> points;
  Vec3 singular_values = Vec3::Zero();   // of the box-normalized, centered cloud
  int dimension = 0;
  bool consistent = false;               // dimension estimate equals 1
};

struct LocusScan {
  std::vector<Vec3> points;              // grid points with S < eps
  std::vector<LocusComponent> components;
  int evaluated = 0;
  int skipped = 0;                       // points where the sample failed
};

/// Cell-centred grid of n[0] x n[1] x n[2] points; 26-connected components of
/// {S < eps} with a PCA dimension estimate in normalized parameter coordinates.
LocusScan geodesic_locus_scan(const Hypersurface3& h, const std::array<int, 3>& n, double eps,
                              const Tolerances& tol = {});

}  // namespace polarmap
