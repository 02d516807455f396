#include <cmath>
#include <numbers>

#include "polarmap/gallery/bryant.hpp"
#include "polarmap/gallery/hyperbolic.hpp"
#include "polarmap/gallery/surfaces.hpp"
#include "polarmap/gallery/weierstrass.hpp"
#include "polarmap/polar/polar_map.hpp"
#include "support.hpp"

using namespace polarmap;

namespace {

constexpr double pi = std::numbers::pi;

Domain square(double lo, double hi) { return Domain::box(Vec2(lo, lo), Vec2(hi, hi)); }

const BranchedSurface& clifford() {
  static const BranchedSurface s = clifford_torus(square(0, 2 * pi));
  return s;
}

Vec alpha4() {
  Vec a(4);
  a << 0.3, -0.5, 0.7, 0.2;
  return a;
}

PolarMap clifford_euclidean() {
  return PolarMap::build_euclidean(gauss_map_of_s3_minimal(clifford()), SupportFunction::linear(alpha4()));
}

PolarMap clifford_spherical() { return PolarMap::build_spherical(gauss_map_in_s4(clifford())); }

PolarMap clifford_hyperbolic() { return PolarMap::build_hyperbolic(conformal_gauss_map(clifford())); }

PolarMap bryant_spherical() {
  const MeromorphicPair pair{RationalFn(Poly::monomial(1, 5)), RationalFn(Poly::monomial(1, 2))};
  return PolarMap::build_spherical(superminimal_surface(pair, square(-0.6, 0.6)));
}

WeierstrassData enneper2() {
  return WeierstrassData::polynomial("enneper2", Poly::constant(1), Poly::monomial(1, 2), square(-0.8, 0.8));
}

std::vector<PolarMap> all_maps() {
  return {clifford_euclidean(),
          clifford_spherical(),
          clifford_hyperbolic(),
          bryant_spherical(),
          cylinder_polar_map(WeierstrassData::catenoid(Domain::box(Vec2(-1, -3), Vec2(1, 3)))),
          PolarMap::build_euclidean(gauss_image(enneper2()), weierstrass_support(enneper2())),
          hyperbolic_cylinder_polar_map(ModelChart::horosphere(), enneper2())};
}

// Random (z, t) away from branch points and from the singular set.
template <class F>
void for_regular_points(const PolarMap& map, int n, std::uint64_t seed, F&& f) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < n) {
    const Vec2 z = map.base().domain().sample(rng);
    const auto bp = map.base().nearest_branch_point(z);
    if (bp && (z - bp->z).norm() < 0.1) continue;
    const double t = test::uniform(rng, -1.0, 1.0);
    if (std::abs(map.operator_sample(z, t).det) < 1e-3) continue;
    f(z, t);
    ++done;
  }
}

}  // namespace

TEST(HessianGamma, ZeroSupportFunction) {
  const auto g = gauss_map_of_s3_minimal(clifford());
  const auto d = hessian_gamma(g, SupportFunction::zero(), Vec2(0.4, 1.2));
  EXPECT_EQ(d.value, 0.0);
  EXPECT_EQ(d.hessian.norm(), 0.0);
  EXPECT_EQ(d.laplacian, 0.0);
}

TEST(HessianGamma, TotallyGeodesicBaseGivesMinusGammaIdentity) {
  const auto g = equatorial_sphere(square(-1, 1));
  const auto gamma = SupportFunction::linear(alpha4());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Vec2 z = g.domain().sample(rng);
    const auto d = hessian_gamma(g, gamma, z);
    EXPECT_NEAR(d.value, g.value(z).dot(alpha4()), 1e-14);
    EXPECT_LT((d.hessian + d.value * Mat2::Identity()).norm(), 1e-10);
    EXPECT_NEAR(d.laplacian, -2 * d.value, 1e-10);
  }
}

TEST(HessianGamma, LinearSupportOverCliffordGaussMap) {
  // Hess gamma = -gamma I + sigma A for gamma = <g, alpha>, sigma = <G, alpha>.
  const auto g = gauss_map_of_s3_minimal(clifford());
  const auto gamma = SupportFunction::linear(alpha4());
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Vec2 z = g.domain().sample(rng);
    const auto d = hessian_gamma(g, gamma, z);
    const double sigma = clifford().value(z).dot(alpha4());
    const Mat2 a = shape_operator(g, z, clifford().value(z));
    EXPECT_LT((d.hessian + d.value * Mat2::Identity() - sigma * a).norm(), 1e-9);
    EXPECT_NEAR(d.laplacian, -2 * d.value, 1e-9);
    // The gradient is the coordinate vector of the metric dual of d gamma.
    const Jet2Point j = g.jet(z);
    const Vec2 dg(j.d1[0].dot(alpha4()), j.d1[1].dot(alpha4()));
    const Mat2 G = first_fundamental_form(j, g.ambient());
    EXPECT_LT((G * d.gradient - dg).norm(), 1e-12);
  }
}

TEST(OperatorP, CliffordDeterminantIsMinusSquare) {
  const auto map = clifford_euclidean();
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Vec2 z = map.base().domain().sample(rng);
    const double t = test::uniform(rng, -2, 2);
    const double sigma = clifford().value(z).dot(alpha4());
    EXPECT_NEAR(operator_P(map, z, t).det, -(sigma - t) * (sigma - t), 1e-9);
  }
}

TEST(OperatorP, AffineInTheFiberParameter) {
  const auto map = clifford_euclidean();
  const Vec2 z(1.1, 0.3);
  const Mat2 a = shape_operator(map.base(), z, clifford().value(z));
  const Mat2 p0 = operator_P(map, z, 0.0).op;
  for (double t : {-1.5, 0.25, 3.0}) EXPECT_LT((operator_P(map, z, t).op - (p0 - t * a)).norm(), 1e-12);
  // A_G A = I for the Clifford torus and its Gauss map.
  const Mat2 ag = shape_operator(clifford(), z, map.base().value(z));
  EXPECT_LT((ag * a - Mat2::Identity()).norm(), 1e-10);
  EXPECT_NEAR(ag.determinant(), -1.0, 1e-12);
}

TEST(OperatorP, RejectsNonEuclideanMaps) {
  const auto map = clifford_spherical();
  EXPECT_EQ(test::error_kind_of([&] { operator_P(map, Vec2(1, 1), 0.0); }), ErrorKind::ContractViolation);
  EXPECT_NO_THROW(polar_operator(map, Vec2(1, 1), 0.0));
}

TEST(SphericalPolar, CliffordClosedForms) {
  const auto map = clifford_spherical();
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const Vec2 z = map.base().domain().sample(rng);
    double t = test::uniform(rng, -pi, pi);
    if (std::abs(std::cos(t)) < 0.05) t += 0.2;
    const double c = std::cos(t);
    EXPECT_NEAR(map.operator_sample(z, t).det, -c * c, 1e-10);
    Vec G(5);
    G << clifford().value(z), 0.0;
    EXPECT_LT((map.value(z, t) - (c * G + std::sin(t) * Vec::Unit(5, 4))).norm(), 1e-12);
    const auto k = principal_curvatures(map, z, t);
    EXPECT_NEAR(k.k[0], 1.0 / std::abs(c), 1e-7);
    EXPECT_NEAR(k.k[1], 0.0, 1e-7);
    EXPECT_NEAR(k.k[2], -1.0 / std::abs(c), 1e-7);
    EXPECT_NEAR(k.k1_formula, 1.0 / std::abs(c), 1e-12);
  }
}

TEST(SingularParameters, CliffordSphericalEquator) {
  const auto map = clifford_spherical();
  const Vec2 z(0.9, 4.0);
  const auto r = singular_parameters(map, z, 0.0, pi);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], pi / 2, 1e-12);
  const auto wide = singular_parameters(map, z, -pi, 2 * pi);
  ASSERT_EQ(wide.size(), 3u);
  EXPECT_NEAR(wide[0], -pi / 2, 1e-12);
  EXPECT_NEAR(wide[2], 3 * pi / 2, 1e-12);
  EXPECT_TRUE(singular_parameters(map, z, 0.0, 1.5).empty());
}

TEST(SingularParameters, CliffordEuclideanDoubleRoot) {
  const auto map = clifford_euclidean();
  const Vec2 z(0.4, 2.2);
  const double sigma = clifford().value(z).dot(alpha4());
  const auto r = singular_parameters(map, z, -2, 2);
  ASSERT_FALSE(r.empty());
  for (double t : r) EXPECT_NEAR(t, sigma, 1e-6);
}

TEST(SingularParameters, RootsMatchSignChangesOfTheDeterminant) {
  // Independent oracle: bracket sign changes of det on a fine fiber grid.
  for (const auto& map : {clifford_hyperbolic(), bryant_spherical(), clifford_spherical()}) {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 20; ++i) {
      const Vec2 z = map.base().domain().sample(rng);
      const auto bp = map.base().nearest_branch_point(z);
      if (bp && (z - bp->z).norm() < 0.1) continue;
      const auto roots = singular_parameters(map, z, -2, 2);
      for (double t : roots) EXPECT_LT(std::abs(map.operator_sample(z, t).det), 1e-9) << map.base().name();
      const int n = 4000;
      double prev = map.operator_sample(z, -2).det;
      for (int k = 1; k <= n; ++k) {
        const double t = -2 + 4.0 * k / n;
        const double d = map.operator_sample(z, t).det;
        if ((prev < 0) != (d < 0)) {
          const bool found = std::any_of(roots.begin(), roots.end(),
                                         [&](double r) { return r >= t - 4.0 / n - 1e-12 && r <= t + 1e-12; });
          EXPECT_TRUE(found) << map.base().name() << " sign change near t = " << t;
        }
        prev = d;
      }
    }
  }
}

TEST(Regularity, ThresholdOnSyntheticDeterminant) {
  // gamma = 0 over the Clifford Gauss map: det P = -t^2.
  const auto map = PolarMap::build_euclidean(gauss_map_of_s3_minimal(clifford()), SupportFunction::zero());
  const auto a = regularity_test(map, Vec2(1, 1), 1e-3);
  EXPECT_EQ(a.verdict, Regularity::Regular);
  EXPECT_NEAR(a.det, -1e-6, 1e-15);
  const auto b = regularity_test(map, Vec2(1, 1), 3e-5);
  EXPECT_EQ(b.verdict, Regularity::Singular);
  EXPECT_FALSE(b.at_branch_point);
}

TEST(Regularity, BryantBranchPointHasNegativeLimit) {
  const auto map = bryant_spherical();
  for (double t : {-0.7, 0.2, 1.0}) {
    const auto r = regularity_test(map, Vec2::Zero(), t);
    EXPECT_TRUE(r.at_branch_point);
    EXPECT_EQ(r.verdict, Regularity::Regular) << "t = " << t;
    EXPECT_LT(r.limit, 0.0);
    EXPECT_LT(r.spread, 0.1);
  }
}

TEST(InducedMetric, CylinderIsBlockDiagonal) {
  const auto map = cylinder_polar_map(WeierstrassData::catenoid(Domain::box(Vec2(-1, -3), Vec2(1, 3))));
  const auto m = induced_metric(map, Vec2(0.3, 0.5), 0.2);
  EXPECT_NEAR(m.formula(0, 2), 0.0, 1e-12);
  EXPECT_NEAR(m.formula(1, 2), 0.0, 1e-12);
  EXPECT_NEAR(m.formula(2, 2), 1.0, 1e-12);
  EXPECT_LT(m.relative_error, 1e-6);
}

TEST(InducedMetric, FormulaAgreesWithFiniteDifferenceGram) {
  for (const auto& map : all_maps()) {
    for_regular_points(map, 40, 16, [&](const Vec2& z, double t) {
      const auto m = induced_metric(map, z, t);
      EXPECT_LT(m.relative_error, 1e-6) << map.base().name();
      // -det <,> equals <P^2 .,.> after the trace-free reduction.
      EXPECT_LT((m.formula - m.squared).norm() / m.formula.norm(), 1e-8) << map.base().name();
    });
  }
}

TEST(InducedMetric, RefusesSingularPoints) {
  const auto map = clifford_spherical();
  EXPECT_EQ(test::error_kind_of([&] { induced_metric(map, Vec2(1, 1), pi / 2); }), ErrorKind::SingularPoint);
  EXPECT_EQ(test::error_kind_of([&] { principal_curvatures(map, Vec2(1, 1), pi / 2); }), ErrorKind::SingularPoint);
}

TEST(PrincipalCurvatures, MinimalWithVanishingMiddleCurvature) {
  for (const auto& map : all_maps()) {
    for_regular_points(map, 40, 17, [&](const Vec2& z, double t) {
      const auto k = principal_curvatures(map, z, t);
      const double scale = std::max(1.0, k.k[0]);
      EXPECT_NEAR(k.k[1] / scale, 0.0, 1e-6) << map.base().name();
      EXPECT_NEAR((k.k[0] + k.k[2]) / scale, 0.0, 1e-6) << map.base().name();
      EXPECT_NEAR(k.k[0] / k.k1_formula, 1.0, 1e-6) << map.base().name();
    });
  }
}

TEST(HyperbolicPolar, StaysOnTheUpperSheet) {
  for (const auto& map : {clifford_hyperbolic(), hyperbolic_cylinder_polar_map(ModelChart::horosphere(), enneper2())}) {
    std::mt19937_64 rng(18);
    for (int i = 0; i < 1000; ++i) {
      const Vec2 z = map.base().domain().sample(rng);
      const Vec x = map.value(z, test::uniform(rng, -2, 2));
      EXPECT_NEAR(inner(x, x, 1), -1.0, 1e-10 * x.squaredNorm());
      EXPECT_GT(x[0], 0.0);
    }
  }
}

TEST(Construction, ErrorKinds) {
  const auto g = gauss_map_of_s3_minimal(clifford());
  const auto bad = SupportFunction::custom("x", [](const Vec2& z, const Jet2Point&) {
    ScalarJet2 s;
    s.v = z.x();
    s.d = Vec2(1, 0);
    return s;
  });
  EXPECT_EQ(test::error_kind_of([&] { PolarMap::build_euclidean(g, bad); }), ErrorKind::InvalidSupportFunction);
  EXPECT_EQ(test::error_kind_of([&] { PolarMap::build_euclidean(gauss_map_in_s4(clifford()), SupportFunction::zero()); }),
            ErrorKind::ConstructionError);
  EXPECT_EQ(test::error_kind_of([&] { PolarMap::build_spherical(clifford()); }), ErrorKind::ConstructionError);
  EXPECT_EQ(test::error_kind_of([&] { PolarMap::build_hyperbolic(gauss_map_in_s4(clifford())); }),
            ErrorKind::ConstructionError);

  const auto cg = conformal_gauss_map(clifford());
  const auto swapped = cg.with_frame([cg](const Vec2& z) {
    auto f = cg.explicit_frame(z);
    std::swap(f[0], f[1]);
    return f;
  });
  EXPECT_EQ(test::error_kind_of([&] { PolarMap::build_hyperbolic(swapped); }), ErrorKind::FrameError);
}

TEST(AsHypersurface, AgreesWithTheMap) {
  const auto map = clifford_spherical();
  ParamBox box;
  box.lo = Vec3(0, 0, -1);
  box.hi = Vec3(2 * pi, 2 * pi, 1);
  const auto h = as_hypersurface(map, box);
  const Vec3 p(0.5, 1.5, 0.3);
  EXPECT_LT((h.position(p) - map.value(p.head<2>(), p.z())).norm(), 1e-14);
  EXPECT_LT(normal_residual(h.eval(p), h.space()), 1e-10);
}
