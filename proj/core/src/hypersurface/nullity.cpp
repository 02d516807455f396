#include "polarmap/hypersurface/nullity.hpp"

#include <cmath>
#include <map>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/finite_diff.hpp"

namespace polarmap {

namespace {

Vec3 nullity_dir(const Hypersurface3& h, const Vec3& p, const Vec3& prev, const Tolerances& tol) {
  Vec3 n = sample(h, p, tol).nullity;
  if (n.dot(prev) < 0.0) n = -n;
  return n;
}

Vec push_forward(const HyperPoint& hp, const Vec3& x) {
  return x[0] * hp.df[0] + x[1] * hp.df[1] + x[2] * hp.df[2];
}

}  // namespace

NullityTrace trace_nullity_geodesic(const Hypersurface3& h, const Vec3& p0, double length, double step,
                                    const Tolerances& tol) {
  require(step > 0.0 && length > 0.0, ErrorKind::ContractViolation, "trace needs positive length and step");
  const HypersurfaceSample s0 = sample(h, p0, tol);
  require(s0.S > tol.s_min, ErrorKind::ConditioningError, "trace start is a totally geodesic point");
  NullityTrace out;
  Vec3 p = p0;
  Vec3 dir = s0.nullity;
  const int steps = static_cast<int>(std::ceil(length / step - 1e-9));
  const double hstep = length / steps;
  auto record = [&](double s, const Vec3& q) {
    const HyperPoint hp = h.eval(q);
    out.points.push_back({s, q, hp.f, hp.xi});
  };
  record(0.0, p);
  for (int k = 0; k < steps; ++k) {
    const Vec3 k1 = nullity_dir(h, p, dir, tol);
    const Vec3 k2 = nullity_dir(h, p + 0.5 * hstep * k1, k1, tol);
    const Vec3 k3 = nullity_dir(h, p + 0.5 * hstep * k2, k1, tol);
    const Vec3 k4 = nullity_dir(h, p + hstep * k3, k1, tol);
    const Vec3 next = p + hstep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!h.box().contains(next)) {
      out.truncated = true;
      break;
    }
    dir = k1;
    p = next;
    record((k + 1) * hstep, p);
  }
  return out;
}

double xi_variation(const NullityTrace& trace) {
  double r = 0.0;
  for (const auto& pt : trace.points) r = std::max(r, (pt.xi - trace.points.front().xi).norm());
  return r;
}

double ruled_representation_residual(const Hypersurface3& h, const NullityTrace& trace, const Tolerances& tol) {
  require(!trace.points.empty(), ErrorKind::ContractViolation, "empty trace");
  const Vec3 p0 = trace.points.front().p;
  const HyperPoint hp = h.eval(p0);
  Vec3 e2 = sample(h, p0, tol).nullity;
  if (trace.points.size() > 1 && e2.dot(trace.points[1].p - p0) < 0.0) e2 = -e2;
  const Vec f0 = hp.f;
  const Vec v0 = push_forward(hp, e2);
  const double c = h.curvature();
  double r = 0.0;
  for (const auto& pt : trace.points) {
    const double s = pt.s;
    Vec pred;
    if (c > 0.5)
      pred = std::cos(s) * f0 + std::sin(s) * v0;
    else if (c < -0.5)
      pred = std::cosh(s) * f0 + std::sinh(s) * v0;
    else
      pred = f0 + s * v0;
    r = std::max(r, (pt.f - pred).norm());
  }
  return r;
}

double ambient_geodesic_residual(const Hypersurface3& h, const Vec3& p, const Tolerances& tol) {
  const Vec3 e2 = sample(h, p, tol).nullity;
  auto w = [&](double s) {
    const Vec3 q = p + s * e2;
    const Vec3 d = nullity_dir(h, q, e2, tol);
    return push_forward(h.eval(q), d);
  };
  const Vec acc = fd::d1_5pt(w, tol.fd_step);
  return (acc + h.curvature() * h.position(p)).norm();
}

LocusScan geodesic_locus_scan(const Hypersurface3& h, const std::array<int, 3>& n, double eps,
                              const Tolerances& tol) {
  for (int d : n) require(d >= 1, ErrorKind::ContractViolation, "locus grid needs positive resolution");
  const ParamBox& box = h.box();
  const Vec3 w = box.width();
  LocusScan out;
  std::map<std::array<int, 3>, Vec3> hits;
  for (int i = 0; i < n[0]; ++i) {
    for (int j = 0; j < n[1]; ++j) {
      for (int k = 0; k < n[2]; ++k) {
        const Vec3 p(box.lo[0] + (i + 0.5) * w[0] / n[0], box.lo[1] + (j + 0.5) * w[1] / n[1],
                     box.lo[2] + (k + 0.5) * w[2] / n[2]);
        ++out.evaluated;
        try {
          if (sample(h, p, tol).S < eps) {
            hits[{i, j, k}] = p;
            out.points.push_back(p);
          }
        } catch (const GeometryError&) {
          ++out.skipped;
        }
      }
    }
  }
  std::map<std::array<int, 3>, bool> seen;
  for (const auto& [cell, _] : hits) {
    if (seen[cell]) continue;
    LocusComponent comp;
    std::vector<std::array<int, 3>> stack{cell};
    seen[cell] = true;
    while (!stack.empty()) {
      const auto c = stack.back();
      stack.pop_back();
      comp.points.push_back(hits.at(c));
      for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
          for (int d = -1; d <= 1; ++d) {
            const std::array<int, 3> nb{c[0] + a, c[1] + b, c[2] + d};
            if (hits.count(nb) && !seen[nb]) {
              seen[nb] = true;
              stack.push_back(nb);
            }
          }
    }
    Eigen::MatrixXd cloud(comp.points.size(), 3);
    for (std::size_t r = 0; r < comp.points.size(); ++r)
      cloud.row(r) = ((comp.points[r] - box.lo).array() / w.array()).matrix().transpose();
    cloud.rowwise() -= cloud.colwise().mean();
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(cloud);
    comp.singular_values.setZero();
    const auto& sv = svd.singularValues();
    comp.singular_values.head(sv.size()) = sv;
    const double top = comp.singular_values[0];
    comp.dimension = 0;
    if (top > 0.0)
      for (int q = 0; q < 3; ++q)
        if (comp.singular_values[q] * tol.pca_ratio >= top) ++comp.dimension;
    comp.consistent = comp.dimension == 1;
    out.components.push_back(std::move(comp));
  }
  return out;
}

}  // namespace polarmap
