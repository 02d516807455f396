#pragma once

#include <array>

#include "polarmap/core/types.hpp"

namespace polarmap {

template <int N>
struct SymEigen {
  std::array<double, N> values;                   // descending
  Eigen::Matrix<double, N, N> vectors;            // column i belongs to values[i]
};

/// Closed-form 2x2 symmetric eigensolver; throws ContractViolation if
/// |M01 - M10| exceeds tol * max(1, |M|).
SymEigen<2> eigen2_sym(const Mat2& m, double tol = 1e-8);
SymEigen<3> eigen3_sym(const Mat3& m, double tol = 1e-8);

/// Solves b v = k m v for symmetric b and positive-definite m. Eigenvectors
/// are m-orthonormal. Throws RegularityError if m is not positive definite or
/// its condition number exceeds max_condition.
SymEigen<3> generalized_eigen3(const Mat3& m, const Mat3& b, double max_condition = 1e12);

/// Matrix of a symmetric bilinear form b in an m-orthonormal basis.
Mat2 to_orthonormal(const Mat2& m, const Mat2& b);

}  // namespace polarmap
