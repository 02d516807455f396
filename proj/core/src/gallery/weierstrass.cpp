#include "polarmap/gallery/weierstrass.hpp"

#include <cmath>

#include "polarmap/core/errors.hpp"

namespace polarmap {

WeierstrassData WeierstrassData::catenoid(const Domain& domain) {
  return make(
      "catenoid",
      [](const auto& x, const auto& y) {
        using std::cos, std::cosh, std::sin;
        return std::array{cosh(x) * cos(y), cosh(x) * sin(y), x};
      },
      domain);
}

WeierstrassData WeierstrassData::helicoid(const Domain& domain) {
  return make(
      "helicoid",
      [](const auto& x, const auto& y) {
        using std::cos, std::sin, std::sinh;
        return std::array{sinh(x) * cos(y), sinh(x) * sin(y), y};
      },
      domain);
}

WeierstrassData WeierstrassData::plane(const Domain& domain) {
  return make(
      "plane",
      [](const auto& x, const auto& y) {
        using S = std::decay_t<decltype(x)>;
        return std::array{x, y, S(0.0)};
      },
      domain, {}, true);
}

namespace {

Poly antiderivative(const Poly& p) {
  std::vector<GaussRational> c{GaussRational(0)};
  for (std::size_t k = 0; k < p.coefficients().size(); ++k)
    c.push_back(p.coefficients()[k] / GaussRational(static_cast<int>(k) + 1));
  return Poly(std::move(c));
}

}  // namespace

WeierstrassData WeierstrassData::polynomial(std::string name, const Poly& f, const Poly& g, const Domain& domain) {
  require(!f.is_zero(), ErrorKind::DegenerateSurface, "Weierstrass f must not vanish identically");
  const Poly one = Poly::constant(1);
  const GaussRational half(Rational(1, 2));
  const GaussRational ihalf(Rational(0), Rational(1, 2));
  const std::array<Poly, 3> p{antiderivative(half * (f * (one - g * g))), antiderivative(ihalf * (f * (one + g * g))),
                              antiderivative(f * g)};
  std::vector<BranchPoint> planar;
  if (g.degree() > 0) {
    for (const auto& [z, m] : roots(g.derivative())) {
      const Vec2 q(std::abs(z.real()) < 1e-12 ? 0.0 : z.real(), std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag());
      if (domain.contains(q)) planar.push_back({q, m});
    }
  }
  auto map = [p](const auto& x, const auto& y) {
    using S = std::decay_t<decltype(x)>;
    const Cx<S> z(x, y);
    return std::array{p[0].eval(z).re, p[1].eval(z).re, p[2].eval(z).re};
  };
  return make(std::move(name), map, domain, std::move(planar), g.degree() <= 0);
}

WeierstrassData WeierstrassData::enneper(const Domain& domain) {
  return polynomial("enneper", Poly::constant(1), Poly::monomial(1, 1), domain);
}

namespace {

// Unit normal of X with first and second derivatives, from a third-order jet.
std::array<D2x2, 3> unit_normal_of(const std::array<D3x2, 3>& x) {
  std::vector<std::vector<D2x2>> rows(2, std::vector<D2x2>(3));
  for (int c = 0; c < 3; ++c) {
    rows[0][c] = x[c].d[0];
    rows[1][c] = x[c].d[1];
  }
  const auto n = detail::unit_normal(rows, 0);
  return {n[0], n[1], n[2]};
}

std::array<D3x2, 3> eval_x(const WeierstrassData& data, const Vec2& z) {
  return data.x3(make_variable<D3x2>(z.x(), 0), make_variable<D3x2>(z.y(), 1));
}

}  // namespace

BranchedSurface surface_of(const WeierstrassData& data) {
  auto jet2 = [data](const Vec2& z) { return extract_jet3(eval_x(data, z)).jet2(); };
  auto jet3 = [data](const Vec2& z) { return extract_jet3(eval_x(data, z)); };
  return BranchedSurface::from_jets(data.name, AmbientSpace::euclidean(3), jet2, jet3, data.domain);
}

BranchedSurface gauss_image(const WeierstrassData& data) {
  require(!data.flat, ErrorKind::DegenerateSurface, "the Gauss map of a plane is constant");
  auto jet = [data](const Vec2& z) {
    const auto n = unit_normal_of(eval_x(data, z));
    return extract_jet2(std::array<D2x2, 4>{n[0], n[1], n[2], D2x2(0.0)});
  };
  auto frame = [](const Vec2&) {
    VJet<2> e4{Vec::Unit(4, 3), {Vec::Zero(4), Vec::Zero(4)}};
    return std::vector<VJet<2>>{e4};
  };
  return BranchedSurface(data.name + "-gauss", AmbientSpace::sphere(4), jet, data.domain, data.planar_points)
      .with_frame(frame);
}

SupportFunction weierstrass_support(const WeierstrassData& data) {
  auto eval = [data](const Vec2& z, const Jet2Point&) {
    const auto x = eval_x(data, z);
    const auto n = unit_normal_of(x);
    D2x2 g(0.0);
    for (int c = 0; c < 3; ++c) g += x[c].v * n[c];
    ScalarJet2 s;
    s.v = g.v.v;
    s.d = Vec2(g.v.d[0], g.v.d[1]);
    s.dd << g.d[0].d[0], g.d[0].d[1], g.d[1].d[0], g.d[1].d[1];
    return s;
  };
  return SupportFunction::custom("<X,N>", eval);
}

Hypersurface3 cylinder_over_r3_minimal(const WeierstrassData& data, double t_lo, double t_hi) {
  ParamBox box{Vec3(data.domain.lo().x(), data.domain.lo().y(), t_lo),
               Vec3(data.domain.hi().x(), data.domain.hi().y(), t_hi)};
  auto f = [x2 = data.x2x3](const D2x3& x, const D2x3& y, const D2x3& t) {
    const auto p = x2(x, y);
    return std::array<D2x3, 4>{p[0], p[1], p[2], t};
  };
  return Hypersurface3::closed_form(data.name + "-cylinder", AmbientSpace::euclidean(4), f, box);
}

PolarMap cylinder_polar_map(const WeierstrassData& data, const Tolerances& tol) {
  return PolarMap::build_euclidean(gauss_image(data), weierstrass_support(data), tol);
}

}  // namespace polarmap
