#include "polarmap/surface/analysis.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/finite_diff.hpp"
#include "polarmap/core/linalg.hpp"
#include "polarmap/hypersurface/hypersurface.hpp"

namespace polarmap {

namespace {

using DV = std::vector<D1x2>;

D1x2 dinner(const DV& a, const DV& b, int s) {
  D1x2 r = a[0] * b[0];
  if (s == 1) r = -r;
  for (std::size_t i = 1; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

DV lift_vec(const Vec& v, const Vec& dx, const Vec& dy) {
  DV out(v.size());
  for (int c = 0; c < v.size(); ++c) out[c] = lift1(v[c], dx[c], dy[c]);
  return out;
}

// Projection of v onto the normal space of the surface inside its target.
Vec normal_part(const Jet2Point& j, const Vec& v, const AmbientSpace& space) {
  Vec r = v;
  if (space.has_quadric()) r -= inner(v, j.value, space) / inner(j.value, j.value, space) * j.value;
  const Mat2 g = first_fundamental_form(j, space);
  const Vec2 rhs(inner(v, j.d1[0], space), inner(v, j.d1[1], space));
  const Vec2 c = g.ldlt().solve(rhs);
  r -= c.x() * j.d1[0] + c.y() * j.d1[1];
  return r;
}

void require_regular(const Mat2& g, const std::string& who) {
  const double det = g.determinant();
  require(std::isfinite(det) && det > 1e-28 * std::max(1.0, g.squaredNorm()), ErrorKind::SingularMetric,
          who + ": metric degenerates (branch point)");
}

}  // namespace

Mat2 first_fundamental_form(const Jet2Point& j, const AmbientSpace& space) {
  Mat2 g;
  g(0, 0) = inner(j.d1[0], j.d1[0], space);
  g(0, 1) = g(1, 0) = inner(j.d1[0], j.d1[1], space);
  g(1, 1) = inner(j.d1[1], j.d1[1], space);
  return g;
}

ConformalFactor conformal_factor(const BranchedSurface& surface, const Vec2& z) {
  const Mat2 g = first_fundamental_form(surface.jet(z), surface.ambient());
  return {g(0, 0), std::max(std::abs(g(0, 0) - g(1, 1)), std::abs(g(0, 1)))};
}

double branch_order_estimate(const BranchedSurface& surface, const Vec2& z0, const Tolerances& tol) {
  const int nr = tol.branch_radii;
  const int na = tol.branch_rays;
  std::vector<double> xs;
  std::vector<double> ys;
  const double ratio = std::pow(tol.branch_r_max / tol.branch_r_min, 1.0 / (nr - 1));
  double r = tol.branch_r_min;
  for (int k = 0; k < nr; ++k, r *= ratio) {
    double acc = 0.0;
    int count = 0;
    for (int a = 0; a < na; ++a) {
      const double th = 2.0 * std::numbers::pi * (a + 0.5) / na;
      const double e = conformal_factor(surface, z0 + r * Vec2(std::cos(th), std::sin(th))).E;
      if (e > 0.0 && std::isfinite(e)) {
        acc += std::log(e);
        ++count;
      }
    }
    if (count == na) {
      xs.push_back(std::log(r));
      ys.push_back(acc / na);
    }
  }
  require(xs.size() >= 3, ErrorKind::DegenerateSurface, "conformal factor vanishes on the sample annulus");
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return 0.5 * slope;
}

double conformal_core(const BranchedSurface& surface, const Vec2& z) {
  return conformal_factor(surface, z).E / surface.branch_weight(z);
}

Mat2 shape_operator(const Jet2Point& j, const Vec& w, const AmbientSpace& space) {
  const Mat2 g = first_fundamental_form(j, space);
  require_regular(g, "shape_operator");
  Mat2 ii;
  ii(0, 0) = inner(j.d2[0], w, space);
  ii(0, 1) = ii(1, 0) = inner(j.d2[1], w, space);
  ii(1, 1) = inner(j.d2[2], w, space);
  return g.inverse() * ii;
}

Mat2 shape_operator(const BranchedSurface& surface, const Vec2& z, const Vec& w) {
  return shape_operator(surface.jet(z), w, surface.ambient());
}

NormalFrame normal_frame(const BranchedSurface& surface, const Vec2& z, const Tolerances& tol) {
  const auto& space = surface.ambient();
  const int s = space.signature_index();
  NormalFrame out;
  if (surface.has_frame()) {
    out.eta = surface.explicit_frame(z);
    for (const auto& e : out.eta) out.norm_sign.push_back(inner(e.v, e.v, space) > 0 ? 1.0 : -1.0);
    return out;
  }
  const Jet2Point j = surface.jet(z);
  require_regular(first_fundamental_form(j, space), "normal_frame");
  if (surface.codimension() == 1) {
    // The oriented cross product never degenerates at an immersed point.
    std::vector<DV> rows;
    if (space.has_quadric()) rows.push_back(lift_vec(j.value, j.d1[0], j.d1[1]));
    rows.push_back(lift_vec(j.d1[0], j.d2[0], j.d2[1]));
    rows.push_back(lift_vec(j.d1[1], j.d2[1], j.d2[2]));
    const DV n = detail::unit_normal(rows, s);
    out.eta.push_back(extract_vjet1(n));
    out.norm_sign.push_back(inner(out.eta[0].v, out.eta[0].v, space) > 0 ? 1.0 : -1.0);
    return out;
  }
  std::vector<DV> basis;
  std::vector<double> signs;
  auto project = [&](DV v) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const D1x2 c = dinner(v, basis[i], s) * signs[i];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * basis[i][k];
    }
    return v;
  };
  auto push = [&](DV v, bool seed) {
    v = project(std::move(v));
    D1x2 n2 = dinner(v, v, s);
    const double sign = n2.v > 0 ? 1.0 : -1.0;
    if (seed)
      require(std::abs(n2.v) >= tol.frame_seed_min * tol.frame_seed_min, ErrorKind::FrameError,
              "frame seed is nearly tangent at this point");
    if (sign < 0) n2 = -n2;
    const D1x2 inv = 1.0 / sqrt(n2);
    for (auto& c : v) c *= inv;
    basis.push_back(v);
    signs.push_back(sign);
    return sign;
  };
  if (space.has_quadric()) push(lift_vec(j.value, j.d1[0], j.d1[1]), false);
  push(lift_vec(j.d1[0], j.d2[0], j.d2[1]), false);
  push(lift_vec(j.d1[1], j.d2[1], j.d2[2]), false);
  const std::size_t first = basis.size();
  for (int k : surface.frame_seeds()) {
    DV e(space.dimension(), D1x2(0.0));
    e[k] = D1x2(1.0);
    push(std::move(e), true);
  }
  for (std::size_t i = first; i < basis.size(); ++i) {
    out.eta.push_back(extract_vjet1(basis[i]));
    out.norm_sign.push_back(signs[i]);
  }
  // A timelike member, if any, is listed first.
  for (std::size_t i = 1; i < out.eta.size(); ++i) {
    if (out.norm_sign[i] < 0) {
      std::swap(out.eta[0], out.eta[i]);
      std::swap(out.norm_sign[0], out.norm_sign[i]);
    }
  }
  return out;
}

double connection_form_34(const BranchedSurface& surface, const Vec2& z, const Vec2& X, FrameRoute route,
                          const Tolerances& tol) {
  if (route == FrameRoute::FiniteDifference) return connection_form_fd(surface, z, X, 0, 1, tol);
  const NormalFrame f = normal_frame(surface, z, tol);
  require(f.eta.size() >= 2, ErrorKind::ContractViolation, "connection_form_34 needs two normals");
  const Vec d3 = X.x() * f.eta[0].d[0] + X.y() * f.eta[0].d[1];
  return inner(d3, f.eta[1].v, surface.ambient());
}

double connection_form_fd(const BranchedSurface& surface, const Vec2& z, const Vec2& X, int a, int b,
                          const Tolerances& tol) {
  const auto& space = surface.ambient();
  const NormalFrame center = normal_frame(surface, z, tol);
  require(static_cast<int>(center.eta.size()) > std::max(a, b), ErrorKind::ContractViolation,
          "connection form index out of range");
  const Vec ref = center.eta[a].v;
  auto eta_a = [&](double s) -> Vec {
    const Vec e = normal_frame(surface, z + s * X, tol).eta[a].v;
    if (inner(e, ref, space) * center.norm_sign[a] <= 0.0)
      fail(ErrorKind::FrameContinuity, "normal frame flips sign across the stencil");
    return e;
  };
  const Vec d = fd::d1_5pt(eta_a, tol.fd_step);
  return inner(d, center.eta[b].v, space);
}

double minimality_residual(const BranchedSurface& surface, const Vec2& z) {
  const Jet2Point j = surface.jet(z);
  const auto& space = surface.ambient();
  const Mat2 g = first_fundamental_form(j, space);
  require_regular(g, "minimality_residual");
  const Vec lap = j.d2[0] + j.d2[2];
  return normal_part(j, lap, space).norm() / (g(0, 0) + g(1, 1));
}

ShapeCheck shape_operator_check(const BranchedSurface& surface, const Vec2& z, const Vec& w) {
  const Jet2Point j = surface.jet(z);
  const auto& space = surface.ambient();
  const Mat2 g = first_fundamental_form(j, space);
  const Mat2 a = shape_operator(j, w, space);
  // In an orthonormal frame the operator is L^T A L^{-T}.
  const Mat2 l = g.llt().matrixL();
  const Mat2 on = l.transpose() * a * l.transpose().inverse();
  return {std::abs(a.trace()), std::abs(on(0, 1) - on(1, 0))};
}

double ellipse_circularity(const BranchedSurface& surface, const Vec2& z, const Tolerances&) {
  const Jet2Point j = surface.jet(z);
  const auto& space = surface.ambient();
  const Mat2 g = first_fundamental_form(j, space);
  require_regular(g, "ellipse_circularity");
  const double e = 0.5 * (g(0, 0) + g(1, 1));
  const Vec a = normal_part(j, j.d2[0], space) / e;
  const Vec b = normal_part(j, j.d2[1], space) / e;
  Mat2 q;
  q(0, 0) = inner(a, a, space);
  q(0, 1) = q(1, 0) = inner(a, b, space);
  q(1, 1) = inner(b, b, space);
  const auto ev = eigen2_sym(q, 1.0);
  const double major = std::sqrt(std::max(0.0, ev.values[0]));
  const double minor = std::sqrt(std::max(0.0, ev.values[1]));
  return (major - minor) / std::max(1.0, major);
}

double frame_gram_residual(const BranchedSurface& surface, const Vec2& z, const Tolerances& tol) {
  const Jet2Point j = surface.jet(z);
  const auto& space = surface.ambient();
  const NormalFrame f = normal_frame(surface, z, tol);
  std::vector<Vec> v;
  std::vector<double> expect;
  if (space.has_quadric()) {
    v.push_back(j.value);
    expect.push_back(space.quadric_constant());
  }
  const double e = inner(j.d1[0], j.d1[0], space);
  v.push_back(j.d1[0] / std::sqrt(e));
  v.push_back(j.d1[1] / std::sqrt(e));
  expect.push_back(1.0);
  expect.push_back(1.0);
  for (std::size_t i = 0; i < f.eta.size(); ++i) {
    v.push_back(f.eta[i].v);
    expect.push_back(f.norm_sign[i]);
  }
  double r = 0.0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b)
      r = std::max(r, std::abs(inner(v[a], v[b], space) - (a == b ? expect[a] : 0.0)));
  return r;
}

double quadric_residual(const BranchedSurface& surface, const Vec2& z) {
  const auto& space = surface.ambient();
  if (!space.has_quadric()) return 0.0;
  const Jet2Point j = surface.jet(z);
  return std::max({space.quadric_residual(j.value), std::abs(inner(j.value, j.d1[0], space)),
                   std::abs(inner(j.value, j.d1[1], space))});
}

void write_surface_csv(const BranchedSurface& surface, const std::vector<Vec2>& samples, std::ostream& out) {
  const int n = surface.ambient().dimension();
  out << "x,y";
  for (int i = 1; i <= n; ++i) out << ",g" << i;
  out << ",E,conformality,minimality\n";
  out << std::setprecision(17);
  for (const auto& z : samples) {
    const Vec g = surface.value(z);
    const auto cf = conformal_factor(surface, z);
    double mres = std::numeric_limits<double>::quiet_NaN();
    try {
      mres = minimality_residual(surface, z);
    } catch (const GeometryError&) {
      // branch point: leave NaN
    }
    out << z.x() << ',' << z.y();
    for (int i = 0; i < n; ++i) out << ',' << g[i];
    out << ',' << cf.E << ',' << cf.residual << ',' << mres << '\n';
  }
}

}  // namespace polarmap
