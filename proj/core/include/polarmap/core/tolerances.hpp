#pragma once

namespace polarmap {

// Every numerical threshold used by the library lives here so that callers
// (and the CLI --tol override) can adjust them in one place.
struct Tolerances {
  double exact = 1e-8;          // exact-jet pipelines
  double fd = 1e-4;             // finite-difference pipelines
  double symmetry = 1e-8;       // symmetric-input checks
  double singular_det = 1e-9;   // |det| at or below this is Singular
  double helmholtz = 1e-6;      // |Δγ + 2γ| on the probe grid

  double fd_step = 1e-4;        // frame derivatives (5-point stencil)
  double jet_fd_step = 1e-5;    // value-only surfaces, first derivatives
  double jet_fd_step2 = 1e-3;   // value-only surfaces, second derivatives
  double laplacian_step = 4e-3; // Δu, Δv
  double hessian_fd_step = 1e-3;

  double branch_r_min = 1e-3;
  double branch_r_max = 1e-1;
  int branch_rays = 8;
  int branch_radii = 12;
  double branch_spread = 0.1;

  double s_min = 1e-6;          // totally geodesic cutoff
  double eigen_gap = 1e-4;      // principal frame extraction
  double pca_ratio = 10.0;      // singular-value ratio between dimensions
  double metric_condition = 1e12;
  double frame_seed_min = 1e-3; // Gram-Schmidt seed must keep this much norm
};

}  // namespace polarmap
