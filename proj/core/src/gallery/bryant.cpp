#include "polarmap/gallery/bryant.hpp"

#include <cmath>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/penrose.hpp"

namespace polarmap {

std::vector<std::complex<double>> MeromorphicPair::poles() const {
  std::vector<std::complex<double>> out;
  for (const auto* f : {&phi, &psi})
    for (const auto& [z, m] : roots(f->denominator())) out.push_back(z);
  return out;
}

std::array<std::complex<double>, 4> HolomorphicCurve::operator()(std::complex<double> z) const {
  return {coords_[0](z), coords_[1](z), coords_[2](z), coords_[3](z)};
}

std::array<std::complex<double>, 4> HolomorphicCurve::derivative(std::complex<double> z) const {
  std::array<std::complex<double>, 4> d;
  for (int i = 0; i < 4; ++i) d[i] = coords_[i].derivative()(z);
  return d;
}

RationalFn HolomorphicCurve::contact_form() const {
  const auto& c = coords_;
  return c[0] * c[1].derivative() - c[1] * c[0].derivative() + c[2] * c[3].derivative() -
         c[3] * c[2].derivative();
}

std::vector<std::pair<std::complex<double>, int>> HolomorphicCurve::critical_points() const {
  // coords[0] = 1, so the curve is singular exactly where the other three
  // derivatives vanish together.
  Poly g;
  for (int i = 1; i < 4; ++i) g = gcd(g, coords_[i].derivative().numerator());
  if (g.is_zero()) fail(ErrorKind::DegenerateSurface, "constant holomorphic curve");
  return roots(g);
}

HolomorphicCurve bryant_curve(const MeromorphicPair& pair) {
  const RationalFn dpsi = pair.psi.derivative();
  require(!dpsi.is_zero(), ErrorKind::DegenerateSurface, "psi is constant, d phi / d psi is undefined");
  const RationalFn ratio = pair.phi.derivative() / dpsi;
  const RationalFn half(Poly::constant(GaussRational(Rational(1, 2))));
  return HolomorphicCurve({RationalFn(Poly::constant(1)), pair.phi - half * pair.psi * ratio, pair.psi,
                           half * ratio});
}

namespace {

template <class S>
std::array<S, 5> project_curve(const HolomorphicCurve& c, const S& x, const S& y) {
  return penrose_project(c.eval(Cx<S>(x, y)));
}

}  // namespace

BranchedSurface superminimal_surface(const MeromorphicPair& pair, const Domain& domain, std::string name) {
  const HolomorphicCurve curve = bryant_curve(pair);
  for (const auto& p : pair.poles())
    require(!domain.contains(Vec2(p.real(), p.imag())), ErrorKind::ConstructionError,
            "meromorphic pair has a pole inside the domain");
  std::vector<BranchPoint> bps;
  for (const auto& [z, m] : curve.critical_points()) {
    const Vec2 p(z.real(), z.imag());
    // Snap roots that are exact up to the numerical solve.
    const Vec2 snapped(std::abs(p.x()) < 1e-12 ? 0.0 : p.x(), std::abs(p.y()) < 1e-12 ? 0.0 : p.y());
    if (domain.contains(snapped)) bps.push_back({snapped, m});
  }
  auto j2 = [curve](const Vec2& z) {
    return jet2_of([&](const D2x2& x, const D2x2& y) { return project_curve(curve, x, y); }, z);
  };
  auto j3 = [curve](const Vec2& z) {
    return jet3_of([&](const D3x2& x, const D3x2& y) { return project_curve(curve, x, y); }, z);
  };
  return BranchedSurface::from_jets(std::move(name), AmbientSpace::sphere(5), j2, j3, domain, std::move(bps));
}

}  // namespace polarmap
