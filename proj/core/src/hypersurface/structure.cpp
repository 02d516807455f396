#include "polarmap/hypersurface/structure.hpp"

#include <algorithm>
#include <cmath>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/finite_diff.hpp"

namespace polarmap {

double StructureResiduals::max_connection() const {
  return *std::max_element(connection.begin(), connection.end());
}
double StructureResiduals::max_pde() const { return *std::max_element(pde.begin(), pde.end()); }
double StructureResiduals::max_bracket() const { return *std::max_element(bracket.begin(), bracket.end()); }

namespace {

struct FramePoint {
  HyperPoint hp;
  Mat3 frame;
  Mat3 metric;
  double lambda = 0.0;
};

FramePoint frame_point(const Hypersurface3& h, const Vec3& p, const Mat3* ref, const Tolerances& tol) {
  const HypersurfaceSample s = sample(h, p, tol);
  if (s.S <= tol.s_min) fail(ErrorKind::ConditioningError, "totally geodesic point: principal frame undefined");
  if (s.k[0] - s.k[1] <= tol.eigen_gap || s.k[1] - s.k[2] <= tol.eigen_gap)
    fail(ErrorKind::ConditioningError, "principal curvatures too close for a frame");
  FramePoint fp;
  fp.hp = h.eval(p);
  fp.frame = s.frame;
  fp.metric = s.metric;
  fp.lambda = s.k[0];
  if (ref) {
    for (int a = 0; a < 3; ++a)
      if (fp.frame.col(a).dot(ref->col(a)) < 0.0) fp.frame.col(a) *= -1.0;
  }
  return fp;
}

// W_a = df(e_a) packed as columns, followed by lambda and the frame.
Eigen::VectorXd pack(const FramePoint& fp) {
  const int n = static_cast<int>(fp.hp.f.size());
  Eigen::VectorXd out(3 * n + 1 + 9);
  for (int a = 0; a < 3; ++a) {
    Vec w = Vec::Zero(n);
    for (int i = 0; i < 3; ++i) w += fp.frame(i, a) * fp.hp.df[i];
    out.segment(a * n, n) = w;
  }
  out[3 * n] = fp.lambda;
  for (int k = 0; k < 9; ++k) out[3 * n + 1 + k] = fp.frame(k % 3, k / 3);
  return out;
}

template <class F>
auto derivative(F&& f, double h, int stencil) {
  return stencil == 3 ? fd::d1_3pt(f, h) : fd::d1_5pt(f, h);
}

}  // namespace

Mat3 principal_frame(const Hypersurface3& h, const Vec3& p, const Mat3* ref, const Tolerances& tol) {
  return frame_point(h, p, ref, tol).frame;
}

LocalStructure local_structure(const Hypersurface3& h, const Vec3& p, const Mat3& ref, const StructureOptions& opt,
                               const Tolerances& tol) {
  const auto& space = h.space();
  const FramePoint c = frame_point(h, p, &ref, tol);
  const int n = static_cast<int>(c.hp.f.size());
  std::array<Eigen::VectorXd, 3> dpack;
  for (int i = 0; i < 3; ++i) {
    auto f = [&](double s) { return pack(frame_point(h, p + s * Vec3::Unit(i), &ref, tol)); };
    dpack[i] = derivative(f, opt.step, opt.stencil);
  }
  LocalStructure out;
  out.frame = c.frame;
  out.lambda = c.lambda;
  std::array<Vec, 3> w;
  const Eigen::VectorXd cp = pack(c);
  for (int a = 0; a < 3; ++a) w[a] = cp.segment(a * n, n);
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 9; ++k) out.dframe[i](k % 3, k / 3) = dpack[i][3 * n + 1 + k];
  }
  for (int a = 0; a < 3; ++a) {
    for (int cdir = 0; cdir < 3; ++cdir) {
      Vec dw = Vec::Zero(n);
      for (int i = 0; i < 3; ++i) dw += c.frame(i, cdir) * dpack[i].segment(a * n, n);
      for (int b = 0; b < 3; ++b) out.omega[a][b][cdir] = inner(dw, w[b], space);
    }
  }
  for (int cdir = 0; cdir < 3; ++cdir) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) d += c.frame(i, cdir) * dpack[i][3 * n];
    out.dlog_lambda[cdir] = d / c.lambda;
  }
  out.u = out.omega[0][1][2];
  out.v = out.omega[0][1][0];
  return out;
}

StructureResiduals structure_residuals(const Hypersurface3& h, const Vec3& p, const StructureOptions& opt,
                                       const Tolerances& tol) {
  const auto& space = h.space();
  const FramePoint c0 = frame_point(h, p, nullptr, tol);
  const Mat3 ref = c0.frame;
  const LocalStructure L = local_structure(h, p, ref, opt, tol);
  const Mat3& e = L.frame;
  const double u = L.u;
  const double v = L.v;
  StructureResiduals r;
  r.c = h.curvature();
  r.lambda = L.lambda;
  r.u = u;
  r.v = v;

  const auto& w = L.omega;
  const Vec3& dl = L.dlog_lambda;
  r.connection = {std::abs(w[0][1][0] - v),           std::abs(w[0][2][0] - 0.5 * dl[2]),
                  std::abs(w[1][2][0] - u),           std::abs(w[0][1][1]),
                  std::abs(w[0][2][1] - 0.5 * u),     std::abs(w[1][2][1]),
                  std::abs(w[0][1][2] - u),           std::abs(w[0][2][2] + 0.5 * dl[0]),
                  std::abs(w[1][2][2] + v)};

  // Coordinate gradients of u and v.
  Vec3 du;
  Vec3 dv;
  for (int i = 0; i < 3; ++i) {
    auto f = [&](double s) {
      const LocalStructure q = local_structure(h, p + s * Vec3::Unit(i), ref, opt, tol);
      return Eigen::Vector2d(q.u, q.v);
    };
    const Eigen::Vector2d d = derivative(f, opt.step, opt.stencil);
    du[i] = d[0];
    dv[i] = d[1];
  }
  const Vec3 eu = e.transpose() * du;  // e_c(u)
  const Vec3 ev = e.transpose() * dv;
  r.pde = {std::abs(ev[1] - (v * v - u * u + r.c)), std::abs(eu[1] - 2.0 * u * v), std::abs(eu[0] - ev[2]),
           std::abs(eu[2] + ev[0])};

  // Lie brackets in coordinates, expressed in the frame.
  auto bracket = [&](int a, int b) {
    Vec3 out = Vec3::Zero();
    for (int i = 0; i < 3; ++i) out += e(i, a) * L.dframe[i].col(b) - e(i, b) * L.dframe[i].col(a);
    return Vec3(e.transpose() * c0.metric * out);
  };
  const Vec3 b12 = bracket(0, 1) - Vec3(-v, 0.0, 0.5 * u);
  const Vec3 b23 = bracket(1, 2) - Vec3(0.5 * u, 0.0, v);
  const Vec3 b13 = bracket(0, 2) - Vec3(-0.5 * dl[2], -2.0 * u, 0.5 * dl[0]);
  r.bracket = {b12.norm(), b23.norm(), b13.norm()};

  if (opt.harmonic) {
    // u and v are themselves frame derivatives; a coarser inner step keeps
    // their roundoff below the second differences taken here.
    StructureOptions coarse = opt;
    coarse.step = opt.laplacian_frame_step;
    auto uv_at = [&](const Vec3& q) {
      const LocalStructure s = local_structure(h, q, ref, coarse, tol);
      return Eigen::Vector2d(s.u, s.v);
    };
    const Eigen::Vector2d uv0 = uv_at(p);
    auto hessian_uv = [&](double hl) {
      std::array<std::array<Eigen::Vector2d, 3>, 3> hess;
      for (int a = 0; a < 3; ++a) {
        const Vec3 ea = Vec3::Unit(a);
        hess[a][a] = (uv_at(p + hl * ea) - 2.0 * uv0 + uv_at(p - hl * ea)) / (hl * hl);
        for (int b = a + 1; b < 3; ++b) {
          const Vec3 eb = Vec3::Unit(b);
          hess[a][b] = (uv_at(p + hl * (ea + eb)) - uv_at(p + hl * (ea - eb)) - uv_at(p - hl * (ea - eb)) +
                        uv_at(p - hl * (ea + eb))) /
                       (4.0 * hl * hl);
          hess[b][a] = hess[a][b];
        }
      }
      return hess;
    };
    // Richardson step on the second differences removes the O(h^2) term.
    const double hl = opt.laplacian_step;
    auto hess = hessian_uv(hl);
    const auto fine = hessian_uv(0.5 * hl);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) hess[a][b] = (4.0 * fine[a][b] - hess[a][b]) / 3.0;
    // Christoffel symbols Gamma^k_ab = M^{kl} <f_ab, f_l>.
    const HyperPoint& hp = c0.hp;
    const Mat3 minv = c0.metric.inverse();
    std::array<std::array<Vec3, 3>, 3> gamma;
    for (int a = 0; a < 3; ++a) {
      auto df_b = [&](int b) {
        return fd::d1_5pt([&](double s) { return h.eval(p + s * Vec3::Unit(a)).df[b]; }, opt.step);
      };
      for (int b = 0; b < 3; ++b) {
        const Vec fab = df_b(b);
        Vec3 low;
        for (int l = 0; l < 3; ++l) low[l] = inner(fab, hp.df[l], space);
        gamma[a][b] = minv * low;
      }
    }
    Eigen::Vector2d lap = Eigen::Vector2d::Zero();
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        Eigen::Vector2d term = hess[a][b];
        for (int k = 0; k < 3; ++k) term -= gamma[a][b][k] * Eigen::Vector2d(du[k], dv[k]);
        lap += minv(a, b) * term;
      }
    }
    r.laplace_u = std::abs(lap[0]);
    r.laplace_v = std::abs(lap[1]);
  }
  return r;
}

}  // namespace polarmap
