#pragma once

// Structure equations of a minimal hypersurface with principal curvatures
// (lambda, 0, -lambda), evaluated with finite differences of the principal frame.
//
// Frame e1, e2, e3 belongs to lambda, 0, -lambda. omega_ab(X) = <nabla_X e_a, e_b>,
// u = omega_12(e3), v = omega_12(e1).

#include <array>

#include "polarmap/hypersurface/hypersurface.hpp"

namespace polarmap {

struct StructureOptions {
  double step = 1e-4;            // frame derivatives
  int stencil = 5;               // 3 or 5 points
  bool harmonic = true;          // also compute the Laplacians of u and v
  double laplacian_step = 4e-3;  // extrapolated with half this step
  double laplacian_frame_step = 2e-3;
};

struct LocalStructure {
  Mat3 frame;                    // coordinate components, sign-aligned to a reference frame
  double lambda = 0.0;
  double u = 0.0;
  double v = 0.0;
  std::array<std::array<std::array<double, 3>, 3>, 3> omega{};  // omega[a][b][c] = omega_ab(e_c)
  Vec3 dlog_lambda = Vec3::Zero();  // e_c(log lambda)
  std::array<Mat3, 3> dframe;       // d/dp_i of the frame
};

struct StructureResiduals {
  double c = 0.0;
  double lambda = 0.0;
  double u = 0.0;
  double v = 0.0;
  std::array<double, 9> connection{};   // nine omega_ab(e_c) identities, row-major as printed
  std::array<double, 4> pde{};          // e2(v)-(v^2-u^2+c), e2(u)-2uv, e1(u)-e3(v), e3(u)+e1(v)
  std::array<double, 3> bracket{};      // [e1,e2], [e2,e3], [e1,e3]
  double laplace_u = 0.0;
  double laplace_v = 0.0;

  double max_connection() const;
  double max_pde() const;
  double max_bracket() const;
};

/// Principal frame at p, aligned column-wise to ref when given. Throws
/// ConditioningError near umbilic or totally geodesic points.
Mat3 principal_frame(const Hypersurface3& h, const Vec3& p, const Mat3* ref, const Tolerances& tol = {});

LocalStructure local_structure(const Hypersurface3& h, const Vec3& p, const Mat3& ref, const StructureOptions& opt,
                               const Tolerances& tol = {});

StructureResiduals structure_residuals(const Hypersurface3& h, const Vec3& p, const StructureOptions& opt = {},
                                       const Tolerances& tol = {});

}  // namespace polarmap
