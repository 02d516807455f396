#pragma once

// Closed-form surfaces in S^3, S^4, de Sitter space and R^4.

#include "polarmap/surface/branched_surface.hpp"

namespace polarmap {

/// (cos x, sin x, cos y, sin y) / sqrt(2) in S^3.
BranchedSurface clifford_torus(const Domain& domain);

/// Inverse stereographic chart of the great sphere x4 = 0 in S^3; totally geodesic.
BranchedSurface equatorial_sphere(const Domain& domain);

/// (z^3/3, z^4/4) in C^2 = R^4, branched of order 2 at the origin.
BranchedSurface synthetic_branched(const Domain& domain);

/// Unit normal of a minimal surface G in S^3 as a surface in S^3, with the
/// explicit normal G. Throws DegenerateSurface when G is totally geodesic.
BranchedSurface gauss_map_of_s3_minimal(const BranchedSurface& G);

/// The Gauss map of G inside the great S^3 = {x5 = 0} of S^4, with normal
/// frame ((G, 0), e5).
BranchedSurface gauss_map_in_s4(const BranchedSurface& G);

/// (0, eta) in de Sitter space for a minimal surface h in S^3 with unit
/// normal eta, with normal frame (e1, (0, h)). Throws Unsupported for a
/// non-minimal h and DegenerateSurface for a totally geodesic h.
BranchedSurface conformal_gauss_map(const BranchedSurface& h);

}  // namespace polarmap
