#pragma once

// Twistor projection CP^3 -> S^4.
//
// C^4 = H^2 via (z1, z2, z3, z4) -> (q1, q2) = (z1 + z2 j, z3 + z4 j); the
// quaternionic line through (q1, q2) (left H-action) is sent to
//   (2 conj(q1) q2, |q1|^2 - |q2|^2) / (|q1|^2 + |q2|^2)  in R^5.
// [1:0:0:0] goes to the pole e5.

#include <array>
#include <complex>

#include "polarmap/core/complex.hpp"
#include "polarmap/core/quaternion.hpp"
#include "polarmap/core/types.hpp"

namespace polarmap {

template <class S>
std::array<S, 5> penrose_project(const std::array<Cx<S>, 4>& p) {
  const auto q1 = Quaternion<S>::from_pair(p[0], p[1]);
  const auto q2 = Quaternion<S>::from_pair(p[2], p[3]);
  const S n1 = norm2(q1);
  const S n2 = norm2(q2);
  const S inv = 1.0 / (n1 + n2);
  const auto r = conj(q1) * q2;
  return {2.0 * r.w * inv, 2.0 * r.x * inv, 2.0 * r.y * inv, 2.0 * r.z * inv, (n1 - n2) * inv};
}

/// Throws DomainError for p = 0.
Vec penrose_project(const std::array<std::complex<double>, 4>& p);

/// Fiber direction j.z = (-conj z2, conj z1, -conj z4, conj z3); horizontal
/// vectors are Hermitian-orthogonal to it.
std::array<std::complex<double>, 4> twistor_fiber_direction(const std::array<std::complex<double>, 4>& z);

/// |<dz, j.z>|, the horizontality defect of a tangent vector dz at z.
double horizontality_defect(const std::array<std::complex<double>, 4>& z,
                            const std::array<std::complex<double>, 4>& dz);

}  // namespace polarmap
