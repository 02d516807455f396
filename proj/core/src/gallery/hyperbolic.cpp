#include "polarmap/gallery/hyperbolic.hpp"

#include "polarmap/core/errors.hpp"

namespace polarmap {

ModelChart ModelChart::horosphere() {
  ModelChart c;
  c.kind_ = ChartKind::Horosphere;
  c.covector_ = Vec::Zero(5);
  c.covector_[0] = 1.0;
  c.covector_[1] = 1.0;
  c.level_ = -1.0;
  return c;
}

ModelChart ModelChart::equidistant(double distance) {
  ModelChart c;
  c.kind_ = ChartKind::Equidistant;
  c.covector_ = Vec::Unit(5, 4);
  c.distance_ = distance;
  c.level_ = std::sinh(distance);
  return c;
}

namespace {

void check_chart(const ModelChart& chart, const WeierstrassData& data) {
  if (chart.kind() == ChartKind::Equidistant)
    require(data.flat, ErrorKind::Unsupported, "equidistant charts only carry the totally geodesic datum");
  const Vec2 corners[] = {data.domain.lo(), data.domain.hi(), Vec2(data.domain.lo().x(), data.domain.hi().y()),
                          Vec2(data.domain.hi().x(), data.domain.lo().y()), data.domain.center()};
  for (const Vec2& z : corners) {
    const auto x = data.x3(make_variable<D3x2>(z.x(), 0), make_variable<D3x2>(z.y(), 1));
    const std::array<double, 3> u{value_of(x[0]), value_of(x[1]), value_of(x[2])};
    if (chart.kind() == ChartKind::Equidistant)
      require(u[0] * u[0] + u[1] * u[1] + u[2] * u[2] < 1.0, ErrorKind::ConstructionError,
              "surface leaves the chart ball");
    require(chart.point(u)[0] > 0.0, ErrorKind::ConstructionError, "chart left the upper sheet");
  }
}

}  // namespace

Hypersurface3 hyperbolic_cylinder(const ModelChart& chart, const WeierstrassData& data, double t_lo,
                                  double t_hi) {
  check_chart(chart, data);
  ParamBox box{Vec3(data.domain.lo().x(), data.domain.lo().y(), t_lo),
               Vec3(data.domain.hi().x(), data.domain.hi().y(), t_hi)};
  auto f = [chart, x2 = data.x2x3](const D2x3& x, const D2x3& y, const D2x3& t) {
    const auto u = x2(x, y);
    const auto h = chart.point(u);
    const auto n = chart.normal(u);
    const D2x3 c = cosh(t);
    const D2x3 s = sinh(t);
    std::array<D2x3, 5> out;
    for (int i = 0; i < 5; ++i) out[i] = c * h[i] + s * n[i];
    return out;
  };
  const std::string prefix = chart.kind() == ChartKind::Horosphere ? "horosphere-" : "equidistant-";
  return Hypersurface3::closed_form(prefix + data.name, AmbientSpace::hyperbolic4(), f, box);
}

namespace {

std::vector<VJet<2>> chart_frame(const ModelChart& chart, const std::array<D2x2, 3>& u) {
  const auto h = chart.point(u);
  const auto n = chart.normal(u);
  VJet<2> a{Vec(5), {Vec(5), Vec(5)}};
  VJet<2> b = a;
  for (int c = 0; c < 5; ++c) {
    a.v[c] = h[c].v.v;
    b.v[c] = n[c].v.v;
    for (int i = 0; i < 2; ++i) {
      a.d[i][c] = h[c].v.d[i];
      b.d[i][c] = n[c].v.d[i];
    }
  }
  return {a, b};
}

}  // namespace

BranchedSurface level_set_normal_surface(const ModelChart& chart, const WeierstrassData& data) {
  check_chart(chart, data);
  auto eval_u = [x3 = data.x3](const Vec2& z) {
    return x3(make_variable<D3x2>(z.x(), 0), make_variable<D3x2>(z.y(), 1));
  };
  auto jet = [chart, eval_u](const Vec2& z) {
    const auto u = eval_u(z);
    const auto h = chart.point(u);
    const auto n = chart.normal(u);
    // Orthogonal to h, eta, h_x, h_y in R^5_1.
    std::vector<std::vector<D2x2>> rows(4, std::vector<D2x2>(5));
    for (int c = 0; c < 5; ++c) {
      rows[0][c] = h[c].v;
      rows[1][c] = n[c].v;
      rows[2][c] = h[c].d[0];
      rows[3][c] = h[c].d[1];
    }
    const auto nu = detail::unit_normal(rows, 1);
    return extract_jet2(nu);
  };
  auto frame = [chart, x2 = data.x3](const Vec2& z) {
    const auto u3 = x2(make_variable<D3x2>(z.x(), 0), make_variable<D3x2>(z.y(), 1));
    return chart_frame(chart, {u3[0].v, u3[1].v, u3[2].v});
  };
  const std::string prefix = chart.kind() == ChartKind::Horosphere ? "horosphere-" : "equidistant-";
  return BranchedSurface(prefix + data.name + "-normal", AmbientSpace::de_sitter4(), jet, data.domain,
                         data.planar_points)
      .with_frame(frame);
}

PolarMap hyperbolic_cylinder_polar_map(const ModelChart& chart, const WeierstrassData& data,
                                       const Tolerances& tol) {
  return PolarMap::build_hyperbolic(level_set_normal_surface(chart, data), tol);
}

}  // namespace polarmap
