// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polarmap/gallery/bryant.hpp"
#include "polarmap/gallery/presets.hpp"
#include "polarmap/gallery/surfaces.hpp"
#include "polarmap/hypersurface/nullity.hpp"
#include "polarmap/hypersurface/structure.hpp"
#include "polarmap/polar/polar_map.hpp"
#include "polarmap/surface/analysis.hpp"

#ifndef POLARMAP_CLI_PATH
#error "POLARMAP_CLI_PATH must name the polarmap executable"
#endif

using namespace polarmap;

namespace {

constexpr double pi = std::numbers::pi;

struct Verdict {
  bool passed = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [" << what << "]";
    }
  }
};

PresetInstance preset(const std::string& name) { return find_preset(name)->build({}); }

Vec3 inner_point(const ParamBox& box, std::mt19937_64& rng, double margin) {
  Vec3 p;
  for (int i = 0; i < 3; ++i) {
    const double w = box.hi[i] - box.lo[i];
    p[i] = std::uniform_real_distribution<double>(box.lo[i] + margin * w, box.hi[i] - margin * w)(rng);
  }
  return p;
}

bool regular(const PresetInstance& inst, const Vec3& p) {
  if (!inst.polar) return true;
  const auto bp = inst.polar->base().nearest_branch_point(p.head<2>());
  if (bp && (p.head<2>() - bp->z).norm() < 1e-6) return false;
  return std::abs(inst.polar->operator_sample(p.head<2>(), p.z()).det) > inst.polar->tolerances().singular_det;
}

// 1. Curvature pattern on the three polar constructions.
void curvature_pattern(Verdict& v) {
  for (const char* name : {"clifford-euclidean", "clifford-spherical", "bryant-z5-z2", "clifford-hyperbolic"}) {
    const auto start = std::chrono::steady_clock::now();
    const auto inst = preset(name);
    std::mt19937_64 rng(101);
    double h = 0, k2 = 0, k13 = 0, K = 0;
    int n = 0;
    while (n < 1000) {
      const Vec3 p = inner_point(inst.box, rng, 0.0);
      if (!regular(inst, p)) continue;
      const auto s = sample(*inst.hypersurface, p);
      h = std::max(h, std::abs(s.H));
      k2 = std::max(k2, std::abs(s.k[1]));
      k13 = std::max(k13, std::abs(s.k[0] + s.k[2]));
      K = std::max(K, std::abs(s.K));
      ++n;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.detail << " " << name << ": H " << h << " k2 " << k2 << " k1+k3 " << k13 << " K " << K << " " << secs << "s;";
    v.expect(h < 1e-5 && k2 < 1e-6 && k13 < 1e-5 && K < 1e-12 && secs < 30, name);
  }
}

// 2. Closed forms of the spherical polar map over the Gauss map of the Clifford torus.
void spherical_closed_forms(Verdict& v) {
  const auto G = clifford_torus(Domain::box(Vec2(0, 0), Vec2(2 * pi, 2 * pi)));
  const auto g = gauss_map_in_s4(G);
  const auto map = PolarMap::build_spherical(g);
  std::mt19937_64 rng(102);
  std::uniform_real_distribution<double> uz(0.0, 2 * pi), ut(-pi, pi);
  double det_err = 0, k1_err = 0, root_err = 0;
  bool roots_ok = true;
  for (int i = 0; i < 200; ++i) {
    const Vec2 z(uz(rng), uz(rng));
    // Oracle: -det A_G = |z|^{2m} Lambda^2 from the shape operator of G along its Gauss map.
    const double det_ag = shape_operator(G, z, g.value(z).head<4>()).determinant();
    const double t = ut(rng);
    const double c = std::cos(t);
    const double formula = c * c / det_ag;
    const auto s = map.operator_sample(z, t);
    det_err = std::max(det_err, std::abs(s.det - formula) / std::abs(formula));
    if (std::abs(c) > 1e-3) {
      const auto k = principal_curvatures(map, z, t);
      const double k1 = std::sqrt(-det_ag) / std::abs(c);
      k1_err = std::max(k1_err, std::abs(k.k[0] - k1) / k1);
    }
    const auto roots = singular_parameters(map, z, -2 * pi, 2 * pi);
    const std::array<double, 4> expected{-1.5 * pi, -0.5 * pi, 0.5 * pi, 1.5 * pi};
    if (roots.size() != expected.size()) {
      roots_ok = false;
      continue;
    }
    for (std::size_t r = 0; r < roots.size(); ++r) root_err = std::max(root_err, std::abs(roots[r] - expected[r]));
  }
  v.detail << " det rel " << det_err << " k1 rel " << k1_err << " singular t " << root_err;
  v.expect(det_err < 1e-6, "det");
  v.expect(k1_err < 1e-5, "k1");
  v.expect(roots_ok && root_err < 1e-9, "singular set");
}

// 3. The superminimal surface from phi = z^5, psi = z^2.
void bryant_example(Verdict& v) {
  const MeromorphicPair pair{RationalFn(Poly::monomial(1, 5)), RationalFn(Poly::monomial(1, 2))};
  const auto c = bryant_curve(pair).coords();
  const bool exact = c[0] == RationalFn(Poly::constant(1)) &&
                     c[1] == RationalFn(Poly::monomial(GaussRational(Rational(-1, 4)), 5)) &&
                     c[2] == RationalFn(Poly::monomial(1, 2)) &&
                     c[3] == RationalFn(Poly::monomial(GaussRational(Rational(5, 4)), 3));
  v.detail << " curve [" << c[0].to_string() << " : " << c[1].to_string() << " : " << c[2].to_string() << " : "
           << c[3].to_string() << "]";
  v.expect(exact, "coefficients");

  const auto inst = preset("bryant-z5-z2");
  const double order = branch_order_estimate(*inst.base, Vec2::Zero());
  v.detail << " order " << order;
  v.expect(std::abs(order - 1.0) <= 0.05, "branch order");

  bool regular_fiber = true;
  for (double t : {0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
    const auto r = regularity_test(*inst.polar, Vec2::Zero(), t);
    regular_fiber = regular_fiber && r.at_branch_point && r.verdict == Regularity::Regular && r.limit < 0;
  }
  v.expect(regular_fiber, "regularity over z = 0");

  const auto scan = geodesic_locus_scan(*inst.hypersurface, {24, 24, 8}, inst.locus_eps);
  bool found = false;
  for (const auto& comp : scan.components) {
    Vec3 mean = Vec3::Zero();
    for (const auto& p : comp.points) mean += p;
    mean /= static_cast<double>(comp.points.size());
    if (comp.dimension == 1 && mean.head<2>().norm() < 0.05) found = true;
  }
  v.detail << " locus components " << scan.components.size();
  v.expect(found, "fiber over z = 0 as a 1-dimensional component");
}

// 4. Structure equations.
void structure_equations(Verdict& v) {
  {
    const auto inst = preset("cylinder-catenoid");
    std::mt19937_64 rng(104);
    double uv = 0, res = 0;
    for (int i = 0; i < 10; ++i) {
      const auto r = structure_residuals(*inst.hypersurface, inner_point(inst.box, rng, 0.1));
      uv = std::max({uv, std::abs(r.u), std::abs(r.v)});
      res = std::max({res, r.max_connection(), r.max_pde(), r.max_bracket()});
    }
    v.detail << " cylinder u,v " << uv << " residual " << res << ";";
    v.expect(uv < 1e-8 && res < 1e-8, "cylinder");
  }
  for (const char* name : {"clifford-spherical", "horosphere-catenoid"}) {
    const auto inst = preset(name);
    const auto& h = *inst.hypersurface;
    std::mt19937_64 rng(105);
    double pde = 0, lap = 0, order = 1e9;
    for (int i = 0; i < 5; ++i) {
      const Vec3 p = inner_point(inst.box, rng, 0.1);
      const auto r = structure_residuals(h, p);
      pde = std::max(pde, r.max_pde());
      lap = std::max({lap, std::abs(r.laplace_u), std::abs(r.laplace_v)});
      // Convergence under refinement with the low-order stencil, above the roundoff floor.
      std::array<double, 3> e{};
      int k = 0;
      for (double step : {0.02, 0.01, 0.005}) {
        StructureOptions opt;
        opt.step = step;
        opt.stencil = 3;
        opt.harmonic = false;
        e[k++] = structure_residuals(h, p, opt).max_pde();
      }
      for (int j = 0; j + 1 < 3; ++j)
        if (e[j] > 1e-11) order = std::min(order, std::log2(e[j] / std::max(e[j + 1], 1e-300)));
    }
    v.detail << " " << name << " pde " << pde << " order " << (order > 1e8 ? 0.0 : order) << " laplacian " << lap
             << ";";
    v.expect(pde < 1e-3, std::string(name) + " pde");
    v.expect(order >= 1.0, std::string(name) + " order");
    v.expect(lap < 5e-3, std::string(name) + " laplacian");
  }
}

// 5. Nullity leaves are geodesic rulings along which the Gauss map is constant.
void nullity_ruling(Verdict& v) {
  for (const char* name : {"cylinder-catenoid", "clifford-euclidean", "clifford-spherical", "bryant-z5-z2",
                           "clifford-hyperbolic", "horosphere-catenoid"}) {
    const auto inst = preset(name);
    const auto& h = *inst.hypersurface;
    const Vec3 w = inst.box.width();
    const double length = 0.5 * 0.25 * w.minCoeff();
    std::mt19937_64 rng(106);
    double xi = 0, ruled = 0;
    int traced = 0;
    for (int i = 0; i < 40 && traced < 8; ++i) {
      const Vec3 p = inner_point(inst.box, rng, 0.25);
      if (!regular(inst, p) || sample(h, p).S <= Tolerances{}.s_min) continue;
      const auto trace = trace_nullity_geodesic(h, p, length, length / 50);
      xi = std::max(xi, xi_variation(trace) / length);
      ruled = std::max(ruled, ruled_representation_residual(h, trace));
      ++traced;
    }
    v.detail << " " << name << " xi/L " << xi << " ruled " << ruled << ";";
    v.expect(traced > 0 && xi < 1e-6 && ruled < 1e-6, name);
  }
}

// 6. Formula-assembled metric against the Gram matrix of dPsi.
void metric_two_path(Verdict& v) {
  for (const auto& p : preset_registry()) {
    const auto inst = p.build({});
    if (!inst.polar) continue;
    std::mt19937_64 rng(107);
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
      const Vec3 q = inner_point(inst.box, rng, 0.0);
      if (!regular(inst, q)) continue;
      worst = std::max(worst, induced_metric(*inst.polar, q.head<2>(), q.z()).relative_error);
    }
    v.detail << " " << p.name << " " << worst << ";";
    v.expect(worst < 1e-6, p.name);
  }
}

// 7. Quadric constraints.
void quadrics(Verdict& v) {
  for (const auto& p : preset_registry()) {
    const auto inst = p.build({});
    std::mt19937_64 rng(108);
    double worst = 0;
    bool sheet = true;
    const auto& space = inst.hypersurface->space();
    const bool check_h = space.has_quadric();
    const bool check_base = inst.base && inst.base->ambient().has_quadric();
    if (!check_h && !check_base) continue;
    for (int i = 0; i < 500; ++i) {
      const Vec3 q = inner_point(inst.box, rng, 0.0);
      if (check_h) {
        const Vec x = inst.hypersurface->position(q);
        worst = std::max(worst, std::abs(inner(x, x, space) - space.quadric_constant()));
        if (space.upper_sheet()) sheet = sheet && x[0] > 0;
      }
      if (check_base) {
        const Vec y = inst.base->value(q.head<2>());
        const auto& a = inst.base->ambient();
        worst = std::max(worst, std::abs(inner(y, y, a) - a.quadric_constant()));
      }
    }
    v.detail << " " << p.name << " " << worst << ";";
    v.expect(worst < 1e-10 && sheet, p.name);
  }
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + POLARMAP_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

// 8. Byte-identical reports.
void determinism(Verdict& v) {
  for (const char* args : {"validate clifford-spherical --grid 8,4", "validate bryant-z5-z2 --grid 8,4",
                           "validate clifford-hyperbolic --grid 8,4 --validators curvature,metric,quadric"}) {
    const std::string a = run_cli(args);
    const std::string b = run_cli(args);
    v.detail << " '" << args << "' " << a.size() << " bytes;";
    v.expect(!a.empty() && a == b, args);
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria{
      {"curvature pattern", curvature_pattern},     {"spherical closed forms", spherical_closed_forms},
      {"superminimal example", bryant_example},      {"structure equations", structure_equations},
      {"nullity ruling", nullity_ruling},            {"two-path metric", metric_two_path},
      {"quadric constraints", quadrics},             {"determinism", determinism},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    v.detail.precision(3);
    try {
      check(v);
    } catch (const std::exception& e) {
      v.passed = false;
      v.detail << " exception: " << e.what();
    }
    std::printf("%s %d %s:%s\n", v.passed ? "PASS" : "FAIL", index++, name.c_str(), v.detail.str().c_str());
    std::fflush(stdout);
    all = all && v.passed;
  }
  return all ? 0 : 1;
}
