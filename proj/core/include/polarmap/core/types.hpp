#pragma once

#include <Eigen/Dense>

namespace polarmap {

// Ambient vectors have 3 to 5 components; the fixed maximum keeps them on the stack.
using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 5, 1>;
using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

}  // namespace polarmap
