#include "polarmap/gallery/presets.hpp"

#include <cmath>
#include <numbers>

#include "polarmap/gallery/hyperbolic.hpp"
#include "polarmap/gallery/surfaces.hpp"
#include "polarmap/gallery/weierstrass.hpp"

namespace polarmap {

namespace {

constexpr double pi = std::numbers::pi;

ParamBox make_box(double x0, double x1, double y0, double y1, double t0, double t1) {
  return ParamBox{Vec3(x0, y0, t0), Vec3(x1, y1, t1)};
}

PresetInstance from_polar(std::string name, BranchedSurface base, PolarMap map, ParamBox box, double t_lo,
                          double t_hi) {
  PresetInstance p;
  p.name = std::move(name);
  p.base = std::move(base);
  p.hypersurface = as_hypersurface(map, box);
  p.polar = std::move(map);
  p.box = box;
  p.scan_t_lo = t_lo;
  p.scan_t_hi = t_hi;
  return p;
}

PresetInstance from_hypersurface(std::string name, BranchedSurface base, Hypersurface3 h) {
  PresetInstance p;
  p.name = std::move(name);
  p.base = std::move(base);
  p.box = h.box();
  p.scan_t_lo = h.box().lo.z();
  p.scan_t_hi = h.box().hi.z();
  p.hypersurface = std::move(h);
  return p;
}

MeromorphicPair monomial_pair(int a, int b) {
  return {RationalFn(Poly::monomial(1, a)), RationalFn(Poly::monomial(1, b))};
}

// cos(0.6 x) cos(0.8 y) solves gamma_xx + gamma_yy = -gamma, which is the
// Helmholtz equation on the Clifford torus with its metric (dx^2 + dy^2) / 2.
SupportFunction clifford_support() {
  return SupportFunction::custom("cos(0.6x)cos(0.8y)", [](const Vec2& z, const Jet2Point&) {
    const double a = 0.6;
    const double b = 0.8;
    const double cx = std::cos(a * z.x());
    const double sx = std::sin(a * z.x());
    const double cy = std::cos(b * z.y());
    const double sy = std::sin(b * z.y());
    ScalarJet2 s;
    s.v = cx * cy;
    s.d = Vec2(-a * sx * cy, -b * cx * sy);
    s.dd << -a * a * cx * cy, a * b * sx * sy, a * b * sx * sy, -b * b * cx * cy;
    return s;
  });
}

Domain square(double lo, double hi) { return Domain::box(Vec2(lo, lo), Vec2(hi, hi)); }

std::vector<Preset> build_registry() {
  std::vector<Preset> r;

  r.push_back({"clifford-euclidean", "euclidean",
               "Euclidean polar map over the Clifford torus with support cos(0.6x)cos(0.8y)",
               {},
               [](const PresetParams&) {
                 auto g = gauss_map_of_s3_minimal(clifford_torus(square(0.0, 2.0 * pi)));
                 auto map = PolarMap::build_euclidean(g, clifford_support());
                 return from_polar("clifford-euclidean", g, map, make_box(0.3, 2.3, 0.3, 2.3, -0.5, 0.5), -2.0,
                                   2.0);
               }});

  r.push_back({"enneper-polar", "euclidean", "Euclidean polar map over the Gauss map of Enneper's surface",
               {},
               [](const PresetParams&) {
                 auto data = WeierstrassData::enneper(square(-0.8, 0.8));
                 auto map = cylinder_polar_map(data);
                 return from_polar("enneper-polar", map.base(), map, make_box(-0.8, 0.8, -0.8, 0.8, -1, 1), -1, 1);
               }});

  r.push_back({"enneper2-polar", "euclidean",
               "Euclidean polar map over the Gauss map of the minimal surface f = 1, g = z^2 (branched at 0)",
               {},
               [](const PresetParams&) {
                 auto data = WeierstrassData::polynomial("enneper2", Poly::constant(1), Poly::monomial(1, 2),
                                                         square(-0.8, 0.8));
                 auto map = cylinder_polar_map(data);
                 auto inst = from_polar("enneper2-polar", map.base(), map, make_box(-0.8, 0.8, -0.8, 0.8, -1, 1),
                                        -1, 1);
                 inst.locus_eps = 0.6;
                 inst.expected_locus = {1};
                 return inst;
               }});

  auto cylinder = [](std::string name, WeierstrassData data) {
    return [name, data](const PresetParams&) {
      auto inst = from_hypersurface(name, surface_of(data), cylinder_over_r3_minimal(data, -1.0, 1.0));
      if (data.flat) inst.expected_locus = {3};
      return inst;
    };
  };
  r.push_back({"cylinder-catenoid", "euclidean", "cylinder over the catenoid in R^4", {},
               cylinder("cylinder-catenoid", WeierstrassData::catenoid(Domain::box(Vec2(-1, -3), Vec2(1, 3))))});
  r.push_back({"cylinder-helicoid", "euclidean", "cylinder over the helicoid in R^4", {},
               cylinder("cylinder-helicoid", WeierstrassData::helicoid(Domain::box(Vec2(-1, -3), Vec2(1, 3))))});
  r.push_back({"cylinder-enneper", "euclidean", "cylinder over Enneper's surface in R^4", {},
               cylinder("cylinder-enneper", WeierstrassData::enneper(square(-0.8, 0.8)))});
  r.push_back({"cylinder-plane", "euclidean", "totally geodesic hyperplane R^3 x R", {},
               cylinder("cylinder-plane", WeierstrassData::plane(square(-1.0, 1.0)))});

  r.push_back({"clifford-spherical", "spherical",
               "spherical polar map over the Gauss map of the Clifford torus, singular at t = pi/2 + k pi",
               {},
               [](const PresetParams&) {
                 auto g = gauss_map_in_s4(clifford_torus(square(0.0, 2.0 * pi)));
                 auto map = PolarMap::build_spherical(g);
                 return from_polar("clifford-spherical", g, map, make_box(0.3, 2.3, 0.3, 2.3, -1.2, 1.2), 0.0,
                                   pi);
               }});

  auto bryant = [](std::string name, int a, int b) {
    return [name, a, b](const PresetParams& params) {
      const MeromorphicPair pair = params.pair ? *params.pair : monomial_pair(a, b);
      auto g = superminimal_surface(pair, square(-0.5, 0.5), name);
      auto map = PolarMap::build_spherical(g);
      auto inst = from_polar(name, g, map, make_box(-0.5, 0.5, -0.5, 0.5, 0.0, pi), 0.0, pi);
      inst.superminimal = true;
      inst.locus_eps = 0.016;
      for (const auto& bp : g.branch_points())
        if (inst.box.contains(Vec3(bp.z.x(), bp.z.y(), 0.5))) inst.expected_locus.push_back(1);
      return inst;
    };
  };
  r.push_back({"bryant-z5-z2", "spherical",
               "spherical polar map over the superminimal surface from phi = z^5, psi = z^2 (branched at 0)",
               {"phi", "psi"}, bryant("bryant-z5-z2", 5, 2)});
  r.push_back({"bryant-z3-z", "spherical",
               "spherical polar map over the unbranched superminimal surface from phi = z^3, psi = z",
               {"phi", "psi"}, bryant("bryant-z3-z", 3, 1)});

  r.push_back({"clifford-hyperbolic", "hyperbolic",
               "hyperbolic polar map over the conformal Gauss map of the Clifford torus",
               {},
               [](const PresetParams&) {
                 auto g = conformal_gauss_map(clifford_torus(square(0.0, 2.0 * pi)));
                 auto map = PolarMap::build_hyperbolic(g);
                 return from_polar("clifford-hyperbolic", g, map, make_box(0.3, 2.3, 0.3, 2.3, 0.2, 1.5), -1.0,
                                   1.5);
               }});

  r.push_back({"horosphere-catenoid", "hyperbolic", "hyperbolic cylinder over the catenoid in a horosphere", {},
               [](const PresetParams&) {
                 auto data = WeierstrassData::catenoid(Domain::box(Vec2(-1, -3), Vec2(1, 3)));
                 return from_hypersurface("horosphere-catenoid", surface_of(data),
                                          hyperbolic_cylinder(ModelChart::horosphere(), data, -1.0, 1.0));
               }});

  r.push_back({"horosphere-catenoid-polar", "hyperbolic",
               "the horosphere catenoid cylinder rebuilt as a hyperbolic polar map",
               {},
               [](const PresetParams&) {
                 auto data = WeierstrassData::catenoid(Domain::box(Vec2(-1, -3), Vec2(1, 3)));
                 auto map = hyperbolic_cylinder_polar_map(ModelChart::horosphere(), data);
                 return from_polar("horosphere-catenoid-polar", map.base(), map, make_box(-1, 1, -3, 3, -1, 1), -1,
                                   1);
               }});

  r.push_back({"horosphere-enneper2", "hyperbolic",
               "hyperbolic polar map over the branched normal surface of f = 1, g = z^2 in a horosphere",
               {},
               [](const PresetParams&) {
                 auto data = WeierstrassData::polynomial("enneper2", Poly::constant(1), Poly::monomial(1, 2),
                                                         square(-0.8, 0.8));
                 auto map = hyperbolic_cylinder_polar_map(ModelChart::horosphere(), data);
                 // S decays like exp(-2t) along the fibers, so the box stays
                 // short in t for the locus threshold to separate them.
                 auto inst = from_polar("horosphere-enneper2", map.base(), map,
                                        make_box(-0.8, 0.8, -0.8, 0.8, -0.25, 0.25), -1, 1);
                 inst.locus_eps = 0.6;
                 inst.expected_locus = {1};
                 return inst;
               }});

  r.push_back({"equidistant-plane", "hyperbolic",
               "hyperbolic cylinder over a totally geodesic plane in an equidistant hypersurface",
               {"distance"},
               [](const PresetParams& params) {
                 const auto it = params.scalars.find("distance");
                 const double d = it == params.scalars.end() ? 0.5 : it->second;
                 auto data = WeierstrassData::plane(square(-0.5, 0.5));
                 auto inst = from_hypersurface("equidistant-plane", surface_of(data),
                                               hyperbolic_cylinder(ModelChart::equidistant(d), data, -1.0, 1.0));
                 inst.expected_locus = {3};
                 return inst;
               }});
  return r;
}

}  // namespace

const std::vector<Preset>& preset_registry() {
  static const std::vector<Preset> registry = build_registry();
  return registry;
}

const Preset* find_preset(std::string_view name) {
  for (const auto& p : preset_registry())
    if (p.name == name) return &p;
  return nullptr;
}

std::vector<const Preset*> list_presets(std::string_view filter) {
  std::vector<const Preset*> out;
  for (const auto& p : preset_registry()) {
    if (filter.empty() || p.name.find(filter) != std::string::npos || p.space.find(filter) != std::string::npos ||
        p.description.find(filter) != std::string::npos)
      out.push_back(&p);
  }
  return out;
}

}  // namespace polarmap
