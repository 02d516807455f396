#include "polarmap/hypersurface/hypersurface.hpp"

#include <algorithm>
#include <cmath>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/finite_diff.hpp"
#include "polarmap/core/linalg.hpp"

namespace polarmap {

bool ParamBox::contains(const Vec3& p) const {
  return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
}

Vec3 ParamBox::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec3 p;
  for (int i = 0; i < 3; ++i) p[i] = lo[i] + (hi[i] - lo[i]) * u(rng);
  return p;
}

Hypersurface3::Hypersurface3(std::string name, AmbientSpace space, EvalFn eval, ParamBox box)
    : name_(std::move(name)), space_(std::move(space)), eval_(std::move(eval)), box_(box) {
  require((box_.hi.array() > box_.lo.array()).all(), ErrorKind::ContractViolation, "empty parameter box");
}

Hypersurface3 Hypersurface3::with_box(const ParamBox& box) const {
  Hypersurface3 h = *this;
  h.box_ = box;
  return h;
}

namespace {

Mat3 gram(const std::array<Vec, 3>& a, const std::array<Vec, 3>& b, const AmbientSpace& space) {
  Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = inner(a[i], b[j], space);
  return m;
}

}  // namespace

HypersurfaceSample sample(const Hypersurface3& h, const Vec3& p, const Tolerances& tol) {
  const HyperPoint hp = h.eval(p);
  const auto& space = h.space();
  HypersurfaceSample out;
  out.p = p;
  out.position = hp.f;
  out.xi = hp.xi;
  out.metric = gram(hp.df, hp.df, space);
  out.metric = 0.5 * (out.metric + out.metric.transpose()).eval();
  const Mat3 b = -gram(hp.df, hp.dxi, space);
  out.second_form = 0.5 * (b + b.transpose());
  const auto eig = generalized_eigen3(out.metric, out.second_form, tol.metric_condition);
  out.shape = out.metric.ldlt().solve(out.second_form);
  out.k = eig.values;
  out.frame = eig.vectors;
  out.H = (out.k[0] + out.k[1] + out.k[2]) / 3.0;
  out.S = out.k[0] * out.k[0] + out.k[1] * out.k[1] + out.k[2] * out.k[2];
  out.K = out.k[0] * out.k[1] * out.k[2];
  int least = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(out.k[i]) < std::abs(out.k[least])) least = i;
  out.nullity = out.frame.col(least);
  return out;
}

double mean_curvature_fd(const Hypersurface3& h, const Vec3& p, double step) {
  const auto& space = h.space();
  const HyperPoint hp = h.eval(p);
  auto f_at = [&](const Vec3& q) { return h.position(q); };
  Mat3 b;
  for (int a = 0; a < 3; ++a) {
    const Vec3 ea = Vec3::Unit(a);
    for (int c = a; c < 3; ++c) {
      Vec fac;
      if (a == c) {
        fac = fd::d2_5pt([&](double s) { return f_at(p + s * ea); }, step);
      } else {
        const Vec3 ec = Vec3::Unit(c);
        fac = fd::d1_5pt(
            [&](double s) { return fd::d1_5pt([&](double r) { return f_at(p + s * ea + r * ec); }, step); }, step);
      }
      b(a, c) = b(c, a) = inner(fac, hp.xi, space);
    }
  }
  const Mat3 m = gram(hp.df, hp.df, space);
  return m.ldlt().solve(b).trace() / 3.0;
}

double normal_residual(const HyperPoint& hp, const AmbientSpace& space) {
  double r = std::abs(inner(hp.xi, hp.xi, space) - 1.0);
  for (const auto& d : hp.df) r = std::max(r, std::abs(inner(hp.xi, d, space)));
  if (space.has_quadric()) r = std::max(r, std::abs(inner(hp.xi, hp.f, space)));
  return r;
}

}  // namespace polarmap
