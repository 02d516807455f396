#include "polarmap/polar/polar_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/finite_diff.hpp"
#include "polarmap/core/linalg.hpp"

namespace polarmap {

std::string_view to_string(PolarKind kind) {
  switch (kind) {
    case PolarKind::Euclidean: return "euclidean";
    case PolarKind::Spherical: return "spherical";
    case PolarKind::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::string_view to_string(Regularity r) {
  switch (r) {
    case Regularity::Regular: return "regular";
    case Regularity::Singular: return "singular";
    case Regularity::NoLimit: return "no-limit";
  }
  return "?";
}

namespace {

Mat2 metric_of(const Jet2Point& j, const AmbientSpace& space) {
  const Mat2 g = first_fundamental_form(j, space);
  const double det = g.determinant();
  require(std::isfinite(det) && det > 1e-28 * std::max(1.0, g.squaredNorm()), ErrorKind::SingularMetric,
          "base surface metric degenerates (branch point)");
  return g;
}

Vec push(const Jet2Point& j, const Vec2& x) { return x.x() * j.d1[0] + x.y() * j.d1[1]; }

// Everything the three constructions share at a point (z, t).
struct Local {
  Jet2Point j;
  Mat2 g;
  Mat2 op;
  Vec2 omega;
  Vec psi;
  Vec psi_t;        // d Psi / dt
};

}  // namespace

GammaDerivatives hessian_gamma(const BranchedSurface& g, const SupportFunction& gamma, const Vec2& z) {
  const Jet2Point j = g.jet(z);
  const auto& space = g.ambient();
  const Mat2 G = metric_of(j, space);
  const Mat2 Ginv = G.inverse();
  const ScalarJet2 s = gamma.eval(z, j);
  GammaDerivatives out;
  out.value = s.v;
  out.gradient = Ginv * s.d;
  // Gamma^k_ij = G^{kl} <g_ij, g_l>.
  Mat2 hcov;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Vec2 low(inner(j.dd(a, b), j.d1[0], space), inner(j.dd(a, b), j.d1[1], space));
      const Vec2 chris = Ginv * low;
      hcov(a, b) = s.dd(a, b) - chris.dot(s.d);
    }
  }
  out.hessian = Ginv * hcov;
  out.laplacian = out.hessian.trace();
  return out;
}

PolarMap::PolarMap(PolarKind kind, BranchedSurface base, std::optional<SupportFunction> gamma, AmbientSpace target,
                   const Tolerances& tol)
    : kind_(kind), base_(std::move(base)), gamma_(std::move(gamma)), target_(std::move(target)), tol_(tol) {}

namespace {

std::vector<Vec2> probe_grid(const BranchedSurface& g) {
  std::vector<Vec2> out;
  const Vec2 lo = g.domain().lo();
  const Vec2 hi = g.domain().hi();
  const double clearance = 0.05 * (hi - lo).minCoeff();
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 5; ++k) {
      const Vec2 z(lo.x() + (i + 0.5) * (hi.x() - lo.x()) / 5, lo.y() + (k + 0.5) * (hi.y() - lo.y()) / 5);
      if (!g.domain().contains(z)) continue;
      const auto bp = g.nearest_branch_point(z);
      if (bp && (z - bp->z).norm() < clearance) continue;
      out.push_back(z);
    }
  }
  return out;
}

bool is_sphere(const AmbientSpace& a, int dim) {
  return a.dimension() == dim && a.signature_index() == 0 && a.has_quadric() && a.quadric_constant() > 0;
}

}  // namespace

PolarMap PolarMap::build_euclidean(BranchedSurface g, SupportFunction gamma, const Tolerances& tol) {
  require(is_sphere(g.ambient(), 4), ErrorKind::ConstructionError, "Euclidean polar map needs a base surface in S^3");
  for (const Vec2& z : probe_grid(g)) {
    const GammaDerivatives d = hessian_gamma(g, gamma, z);
    const double scale = std::max({1.0, std::abs(d.value), std::abs(d.laplacian)});
    if (std::abs(d.laplacian + 2.0 * d.value) > tol.helmholtz * scale)
      fail(ErrorKind::InvalidSupportFunction, "support function violates the Helmholtz equation");
  }
  return PolarMap(PolarKind::Euclidean, std::move(g), std::move(gamma), AmbientSpace::euclidean(4), tol);
}

PolarMap PolarMap::build_spherical(BranchedSurface g, const Tolerances& tol) {
  require(is_sphere(g.ambient(), 5), ErrorKind::ConstructionError, "spherical polar map needs a base surface in S^4");
  PolarMap m(PolarKind::Spherical, std::move(g), std::nullopt, AmbientSpace::sphere(5), tol);
  const auto grid = probe_grid(m.base_);
  require(!grid.empty(), ErrorKind::ConstructionError, "empty probe grid");
  const auto f = normal_frame(m.base_, grid.front(), tol);
  require(f.eta.size() == 2 && f.norm_sign[0] > 0 && f.norm_sign[1] > 0, ErrorKind::FrameError,
          "spherical polar map needs two unit spacelike normals");
  return m;
}

PolarMap PolarMap::build_hyperbolic(BranchedSurface g, const Tolerances& tol) {
  const auto& a = g.ambient();
  require(a.dimension() == 5 && a.signature_index() == 1 && a.has_quadric() && a.quadric_constant() > 0,
          ErrorKind::ConstructionError, "hyperbolic polar map needs a base surface in de Sitter space");
  PolarMap m(PolarKind::Hyperbolic, std::move(g), std::nullopt, AmbientSpace::hyperbolic4(), tol);
  const auto grid = probe_grid(m.base_);
  require(!grid.empty(), ErrorKind::ConstructionError, "empty probe grid");
  const auto f = normal_frame(m.base_, grid.front(), tol);
  require(f.eta.size() == 2, ErrorKind::FrameError, "hyperbolic polar map needs two normals");
  require(f.norm_sign[0] < 0, ErrorKind::FrameError, "first normal eta3 must be timelike");
  require(f.norm_sign[1] > 0, ErrorKind::FrameError, "second normal eta4 must be spacelike");
  return m;
}

PolarMap::Frame PolarMap::frame(const Vec2& z) const {
  Frame f{normal_frame(base_, z, tol_).eta};
  if (kind_ == PolarKind::Hyperbolic && f.eta[0].v[0] < 0.0) {
    // Keep eta3 future-pointing so that Psi stays on the upper sheet.
    f.eta[0].v = -f.eta[0].v;
    for (auto& d : f.eta[0].d) d = -d;
  }
  return f;
}

namespace {

Local evaluate(const PolarMap& m, const std::vector<VJet<2>>& eta, const Vec2& z, double t) {
  const auto& g = m.base();
  const auto& space = g.ambient();
  Local L;
  L.j = g.jet(z);
  L.g = metric_of(L.j, space);
  if (m.kind() == PolarKind::Euclidean) {
    const GammaDerivatives gd = hessian_gamma(g, *m.support(), z);
    const VJet<2>& n = eta[0];
    const Mat2 a = shape_operator(L.j, n.v, space);
    L.op = gd.hessian + gd.value * Mat2::Identity() - t * a;
    const Vec grad = push(L.j, gd.gradient);
    L.omega = Vec2(-inner(n.d[0], grad, space), -inner(n.d[1], grad, space));
    L.psi = gd.value * L.j.value + grad + t * n.v;
    L.psi_t = n.v;
    return L;
  }
  const VJet<2>& e3 = eta[0];
  const VJet<2>& e4 = eta[1];
  double c3;
  double c4;
  double d3;
  double d4;
  if (m.kind() == PolarKind::Spherical) {
    c3 = std::cos(t);
    c4 = std::sin(t);
    d3 = -std::sin(t);
    d4 = std::cos(t);
  } else {
    c3 = std::cosh(t);
    c4 = std::sinh(t);
    d3 = std::sinh(t);
    d4 = std::cosh(t);
  }
  L.psi = c3 * e3.v + c4 * e4.v;
  L.psi_t = d3 * e3.v + d4 * e4.v;
  L.op = shape_operator(L.j, L.psi, space);
  L.omega = Vec2(inner(e3.d[0], e4.v, space), inner(e3.d[1], e4.v, space));
  return L;
}

}  // namespace

Vec PolarMap::value(const Vec2& z, double t) const {
  const Frame f = frame(z);
  if (kind_ == PolarKind::Euclidean) return evaluate(*this, f.eta, z, t).psi;
  Vec psi = kind_ == PolarKind::Spherical ? Vec(std::cos(t) * f.eta[0].v + std::sin(t) * f.eta[1].v)
                                          : Vec(std::cosh(t) * f.eta[0].v + std::sinh(t) * f.eta[1].v);
  if (kind_ == PolarKind::Hyperbolic && psi[0] <= 0.0)
    fail(ErrorKind::ConstructionError, "polar map left the upper sheet of H^4");
  return psi;
}

PolarDifferential PolarMap::differential(const Vec2& z, double t) const {
  const Frame f = frame(z);
  const Local L = evaluate(*this, f.eta, z, t);
  PolarDifferential d;
  d.psi = L.psi;
  for (int i = 0; i < 2; ++i) {
    const Vec2 col = L.op.col(i);
    if (kind_ == PolarKind::Euclidean)
      d.dpsi[i] = push(L.j, col) + L.omega[i] * L.psi_t;
    else
      d.dpsi[i] = -push(L.j, col) + L.omega[i] * L.psi_t;
  }
  d.dpsi[2] = L.psi_t;
  d.xi = L.j.value;
  d.dxi = {L.j.d1[0], L.j.d1[1], Vec::Zero(L.j.value.size())};
  return d;
}

PolarOperatorSample PolarMap::operator_sample(const Vec2& z, double t) const {
  const Frame f = frame(z);
  const Local L = evaluate(*this, f.eta, z, t);
  PolarOperatorSample s;
  s.z = z;
  s.t = t;
  s.op = L.op;
  s.det = L.op.determinant();
  s.scaled_det = base_.branch_weight(z) * s.det;
  s.omega = L.omega;
  return s;
}

PolarOperatorSample operator_P(const PolarMap& map, const Vec2& z, double t) {
  require(map.kind() == PolarKind::Euclidean, ErrorKind::ContractViolation, "operator_P needs a Euclidean polar map");
  return map.operator_sample(z, t);
}

PolarOperatorSample polar_operator(const PolarMap& map, const Vec2& z, double t) {
  return map.operator_sample(z, t);
}

RegularityResult branch_limit(const PolarMap& map, const BranchPoint& bp, double t) {
  const Tolerances& tol = map.tolerances();
  const int nr = tol.branch_radii;
  const int na = tol.branch_rays;
  const double ratio = std::pow(tol.branch_r_max / tol.branch_r_min, 1.0 / (nr - 1));
  std::vector<double> limits;
  for (int a = 0; a < na; ++a) {
    const double th = 2.0 * std::numbers::pi * (a + 0.5) / na;
    const Vec2 dir(std::cos(th), std::sin(th));
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double r = tol.branch_r_min;
    for (int k = 0; k < nr; ++k, r *= ratio) {
      const Vec2 z = bp.z + r * dir;
      const double s = std::pow(r, 2 * bp.order) * map.operator_sample(z, t).det;
      sx += r;
      sy += s;
      sxx += r * r;
      sxy += r * s;
    }
    const double slope = (nr * sxy - sx * sy) / (nr * sxx - sx * sx);
    limits.push_back((sy - slope * sx) / nr);
  }
  RegularityResult out;
  out.at_branch_point = true;
  double mean = 0.0;
  for (double l : limits) mean += l;
  mean /= na;
  const auto [lo, hi] = std::minmax_element(limits.begin(), limits.end());
  out.limit = mean;
  out.spread = mean != 0.0 ? (*hi - *lo) / std::abs(mean) : std::numeric_limits<double>::infinity();
  const double largest = std::max(std::abs(*lo), std::abs(*hi));
  if (largest <= tol.singular_det) {
    out.verdict = Regularity::Singular;
  } else if (out.spread > tol.branch_spread) {
    out.verdict = Regularity::NoLimit;
  } else {
    out.verdict = mean < -tol.singular_det ? Regularity::Regular : Regularity::Singular;
  }
  return out;
}

RegularityResult regularity_test(const PolarMap& map, const Vec2& z, double t) {
  const auto bp = map.base().nearest_branch_point(z);
  if (bp && (z - bp->z).norm() <= 1e-9) return branch_limit(map, *bp, t);
  RegularityResult out;
  out.det = map.operator_sample(z, t).det;
  out.verdict = std::abs(out.det) > map.tolerances().singular_det ? Regularity::Regular : Regularity::Singular;
  return out;
}

namespace {

// Real roots of a x^2 + b x + c, merging a numerically double root.
std::vector<double> quadratic_roots(double a, double b, double c) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0.0) return {};
  if (std::abs(a) <= 1e-12 * scale) {
    if (std::abs(b) <= 1e-12 * scale) return {};
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < -1e-10 * scale * scale) return {};
  if (disc <= 1e-10 * scale * scale) return {-b / (2.0 * a)};
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  std::vector<double> r{q / a, c / q};
  std::sort(r.begin(), r.end());
  return r;
}

void add_periodic(std::vector<double>& out, double base, double period, double lo, double hi) {
  const double k0 = std::ceil((lo - base) / period - 1e-12);
  for (double k = k0;; k += 1.0) {
    const double t = base + k * period;
    if (t > hi + 1e-12) break;
    out.push_back(t);
  }
}

}  // namespace

std::vector<double> singular_parameters(const PolarMap& map, const Vec2& z, double t_lo, double t_hi) {
  std::vector<double> out;
  if (map.kind() == PolarKind::Euclidean) {
    const Mat2 b = map.operator_sample(z, 0.0).op;
    const Mat2 a = b - map.operator_sample(z, 1.0).op;
    // det(B - tA) = det B - t (B00 A11 + B11 A00 - B01 A10 - B10 A01) + t^2 det A.
    const double lin = b(0, 0) * a(1, 1) + b(1, 1) * a(0, 0) - b(0, 1) * a(1, 0) - b(1, 0) * a(0, 1);
    for (double t : quadratic_roots(a.determinant(), -lin, b.determinant()))
      if (t >= t_lo && t <= t_hi) out.push_back(t);
    return out;
  }
  const auto& space = map.base().ambient();
  const Jet2Point j = map.base().jet(z);
  const auto f = normal_frame(map.base(), z, map.tolerances());
  const Mat2 a3 = shape_operator(j, f.eta[0].v, space);
  const Mat2 a4 = shape_operator(j, f.eta[1].v, space);
  const double d3 = a3.determinant();
  const double d4 = a4.determinant();
  const double mix = (a3 + a4).determinant() - d3 - d4;
  if (map.kind() == PolarKind::Hyperbolic) {
    // det = cosh^2 t (d3 + mix tau + d4 tau^2), tau = tanh t.
    for (double tau : quadratic_roots(d4, mix, d3)) {
      if (std::abs(tau) >= 1.0) continue;
      const double t = std::atanh(tau);
      if (t >= t_lo && t <= t_hi) out.push_back(t);
    }
    return out;
  }
  // det = Q(cos t, sin t) for the quadratic form Q = [[d3, mix/2], [mix/2, d4]].
  Mat2 q;
  q << d3, 0.5 * mix, 0.5 * mix, d4;
  const auto e = eigen2_sym(q, 1.0);
  const double l1 = e.values[0];
  const double l2 = e.values[1];
  const double scale = std::max(std::abs(l1), std::abs(l2));
  if (scale == 0.0) return out;
  const double a1 = std::atan2(e.vectors(1, 0), e.vectors(0, 0));
  const double a2 = std::atan2(e.vectors(1, 1), e.vectors(0, 1));
  const double pi = std::numbers::pi;
  if (std::abs(l1) <= 1e-12 * scale) {
    add_periodic(out, a1, pi, t_lo, t_hi);
  } else if (std::abs(l2) <= 1e-12 * scale) {
    add_periodic(out, a2, pi, t_lo, t_hi);
  } else if (l1 > 0.0 && l2 < 0.0) {
    const double phi = std::atan(std::sqrt(-l1 / l2));
    add_periodic(out, a1 + phi, pi, t_lo, t_hi);
    add_periodic(out, a1 - phi, pi, t_lo, t_hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedMetric induced_metric(const PolarMap& map, const Vec2& z, double t) {
  const PolarOperatorSample s = map.operator_sample(z, t);
  if (std::abs(s.det) <= map.tolerances().singular_det)
    fail(ErrorKind::SingularPoint, "induced metric requested at a singular point");
  const Mat2 g = first_fundamental_form(map.base().jet(z), map.base().ambient());
  const Vec3 theta(s.omega.x(), s.omega.y(), 1.0);
  InducedMetric m;
  m.formula = theta * theta.transpose();
  m.formula.topLeftCorner<2, 2>() += -s.det * g;
  m.squared = theta * theta.transpose();
  m.squared.topLeftCorner<2, 2>() += s.op.transpose() * g * s.op;

  const auto& space = map.target();
  const double h = map.tolerances().jet_fd_step;
  std::array<Vec, 3> d;
  d[0] = fd::d1_richardson([&](double e) { return map.value(z + Vec2(e, 0.0), t); }, h);
  d[1] = fd::d1_richardson([&](double e) { return map.value(z + Vec2(0.0, e), t); }, h);
  d[2] = fd::d1_richardson([&](double e) { return map.value(z, t + e); }, h);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) m.gram(a, b) = inner(d[a], d[b], space);
  m.relative_error = (m.formula - m.gram).cwiseAbs().maxCoeff() / m.gram.cwiseAbs().maxCoeff();
  return m;
}

PrincipalCurvatures principal_curvatures(const PolarMap& map, const Vec2& z, double t) {
  const PolarOperatorSample s = map.operator_sample(z, t);
  if (std::abs(s.det) <= map.tolerances().singular_det)
    fail(ErrorKind::SingularPoint, "principal curvatures requested at a singular point");
  const PolarDifferential d = map.differential(z, t);
  const auto& space = map.target();
  Mat3 m;
  Mat3 b;
  for (int i = 0; i < 3; ++i) {
    for (int k = 0; k < 3; ++k) {
      m(i, k) = inner(d.dpsi[i], d.dpsi[k], space);
      b(i, k) = -inner(d.dpsi[i], d.dxi[k], space);
    }
  }
  const auto e = generalized_eigen3(m, b, map.tolerances().metric_condition);
  PrincipalCurvatures out;
  out.k = e.values;
  out.k1_formula = s.det < 0.0 ? 1.0 / std::sqrt(-s.det) : std::numeric_limits<double>::quiet_NaN();
  return out;
}

Hypersurface3 as_hypersurface(const PolarMap& map, const ParamBox& box) {
  auto eval = [map](const Vec3& p) {
    const PolarDifferential d = map.differential(Vec2(p[0], p[1]), p[2]);
    return HyperPoint{d.psi, d.dpsi, d.xi, d.dxi};
  };
  return Hypersurface3(map.base().name() + "/polar", map.target(), eval, box);
}

}  // namespace polarmap
