#include "polarmap/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polarmap/core/errors.hpp"

namespace polarmap {

namespace {

template <int N>
void check_symmetric(const Eigen::Matrix<double, N, N>& m, double tol) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  require(asym <= tol * scale, ErrorKind::ContractViolation, "matrix is not symmetric");
}

}  // namespace

SymEigen<2> eigen2_sym(const Mat2& m, double tol) {
  check_symmetric<2>(m, tol);
  const double a = m(0, 0);
  const double d = m(1, 1);
  const double b = 0.5 * (m(0, 1) + m(1, 0));
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double r = std::hypot(half, b);
  SymEigen<2> out;
  out.values = {mean + r, mean - r};
  // Eigenvector of the larger value; the stable branch depends on the sign of half.
  Vec2 v;
  if (r == 0.0) {
    v = Vec2(1.0, 0.0);
  } else if (half >= 0.0) {
    v = Vec2(half + r, b);
  } else {
    v = Vec2(b, r - half);
  }
  v.normalize();
  out.vectors.col(0) = v;
  out.vectors.col(1) = Vec2(-v.y(), v.x());
  return out;
}

SymEigen<3> eigen3_sym(const Mat3& m, double tol) {
  check_symmetric<3>(m, tol);
  const Mat3 s = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Mat3> solver(s);
  SymEigen<3> out;
  // Eigen returns ascending order.
  for (int i = 0; i < 3; ++i) {
    out.values[i] = solver.eigenvalues()[2 - i];
    out.vectors.col(i) = solver.eigenvectors().col(2 - i);
  }
  return out;
}

SymEigen<3> generalized_eigen3(const Mat3& m, const Mat3& b, double max_condition) {
  const Mat3 ms = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Mat3> mspec(ms, Eigen::EigenvaluesOnly);
  const double lo = mspec.eigenvalues()[0];
  const double hi = mspec.eigenvalues()[2];
  require(lo > 0.0 && hi <= max_condition * lo, ErrorKind::RegularityError,
          "induced metric is degenerate or badly conditioned");
  const Eigen::LLT<Mat3> llt(ms);
  const Mat3 l = llt.matrixL();
  const Mat3 linv = l.inverse();
  const Mat3 c = linv * (0.5 * (b + b.transpose())) * linv.transpose();
  auto e = eigen3_sym(0.5 * (c + c.transpose()), 1.0);
  e.vectors = linv.transpose() * e.vectors;
  return e;
}

Mat2 to_orthonormal(const Mat2& m, const Mat2& b) {
  const Eigen::LLT<Mat2> llt(m);
  const Mat2 linv = Mat2(llt.matrixL()).inverse();
  return linv * b * linv.transpose();
}

}  // namespace polarmap
