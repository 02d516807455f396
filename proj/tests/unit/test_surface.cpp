#include <cmath>
#include <numbers>
#include <sstream>

#include "polarmap/core/jet.hpp"
#include "polarmap/gallery/bryant.hpp"
#include "polarmap/gallery/hyperbolic.hpp"
#include "polarmap/gallery/surfaces.hpp"
#include "polarmap/gallery/weierstrass.hpp"
#include "polarmap/surface/analysis.hpp"
#include "support.hpp"

using namespace polarmap;

namespace {

constexpr double pi = std::numbers::pi;

Domain square(double lo, double hi) { return Domain::box(Vec2(lo, lo), Vec2(hi, hi)); }

MeromorphicPair monomials(int a, int b) {
  return {RationalFn(Poly::monomial(1, a)), RationalFn(Poly::monomial(1, b))};
}

BranchedSurface bryant_z5_z2(double half = 0.6) { return superminimal_surface(monomials(5, 2), square(-half, half)); }

std::vector<BranchedSurface> gallery_surfaces() {
  const auto clifford = clifford_torus(square(0.0, 2 * pi));
  const auto enneper2 = WeierstrassData::polynomial("enneper2", Poly::constant(1), Poly::monomial(1, 2), square(-0.8, 0.8));
  return {clifford,
          equatorial_sphere(square(-1, 1)),
          synthetic_branched(square(-1, 1)),
          gauss_map_of_s3_minimal(clifford),
          gauss_map_in_s4(clifford),
          conformal_gauss_map(clifford),
          bryant_z5_z2(0.5),
          superminimal_surface(monomials(3, 1), square(-0.5, 0.5)),
          surface_of(WeierstrassData::catenoid(Domain::box(Vec2(-1, -3), Vec2(1, 3)))),
          surface_of(WeierstrassData::helicoid(Domain::box(Vec2(-1, -3), Vec2(1, 3)))),
          gauss_image(WeierstrassData::enneper(square(-0.8, 0.8))),
          gauss_image(enneper2),
          level_set_normal_surface(ModelChart::horosphere(), enneper2)};
}

// Random points of the domain that keep away from declared branch points.
std::vector<Vec2> regular_samples(const BranchedSurface& s, int n, std::mt19937_64& rng) {
  std::vector<Vec2> out;
  while (static_cast<int>(out.size()) < n) {
    const Vec2 z = s.domain().sample(rng);
    const auto bp = s.nearest_branch_point(z);
    if (bp && (z - bp->z).norm() < 0.05) continue;
    out.push_back(z);
  }
  return out;
}

}  // namespace

TEST(ConformalFactor, EquatorialSphereIsConformalAndImmersed) {
  const auto s = equatorial_sphere(square(-1, 1));
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto cf = conformal_factor(s, s.domain().sample(rng));
    EXPECT_GT(cf.E, 0.0);
    EXPECT_LT(cf.residual, 1e-10);
  }
}

TEST(ConformalFactor, VanishesAtBryantBranchPoint) {
  EXPECT_EQ(conformal_factor(bryant_z5_z2(), Vec2::Zero()).E, 0.0);
}

TEST(ConformalFactor, GallerySurfacesAreConformal) {
  std::mt19937_64 rng(2);
  for (const auto& s : gallery_surfaces()) {
    for (const Vec2& z : regular_samples(s, 1000, rng)) {
      const auto cf = conformal_factor(s, z);
      ASSERT_LT(cf.residual, 1e-8) << s.name() << " at " << z.transpose();
    }
  }
}

TEST(BranchOrder, BryantBranchPointHasOrderOne) {
  EXPECT_NEAR(branch_order_estimate(bryant_z5_z2(), Vec2::Zero()), 1.0, 0.05);
}

TEST(BranchOrder, ImmersedPointHasOrderZero) {
  EXPECT_NEAR(branch_order_estimate(clifford_torus(square(-1, 1)), Vec2::Zero()), 0.0, 0.05);
  EXPECT_NEAR(branch_order_estimate(superminimal_surface(monomials(3, 1), square(-0.5, 0.5)), Vec2::Zero()), 0.0,
              0.05);
}

TEST(BranchOrder, SyntheticSurfaceHasOrderTwo) {
  // E = |z|^4 (1 + |z|^2) for (z^3/3, z^4/4).
  const auto s = synthetic_branched(square(-1, 1));
  EXPECT_NEAR(branch_order_estimate(s, Vec2::Zero()), 2.0, 0.05);
  const Vec2 z(0.3, -0.2);
  EXPECT_NEAR(conformal_core(s, z), 1.0 + z.squaredNorm(), 1e-12);
}

TEST(BranchOrder, DeclaredBranchPointsHaveIntegerOrders) {
  for (const auto& s : gallery_surfaces())
    for (const auto& bp : s.branch_points())
      EXPECT_NEAR(branch_order_estimate(s, bp.z), bp.order, 0.05) << s.name();
}

TEST(BranchOrder, IdenticallyVanishingFactorIsDegenerate) {
  const auto point = BranchedSurface::from_values(
      "point", AmbientSpace::euclidean(3), [](const Vec2&) { return Vec(Vec::Unit(3, 0)); }, square(-1, 1));
  EXPECT_EQ(test::error_kind_of([&] { branch_order_estimate(point, Vec2::Zero()); }), ErrorKind::DegenerateSurface);
}

TEST(ShapeOperator, TotallyGeodesicSphereHasZeroShapeOperator) {
  const auto s = equatorial_sphere(square(-1, 1));
  const Vec2 z(0.3, 0.4);
  EXPECT_LT(shape_operator(s, z, Vec::Unit(4, 3)).norm(), 1e-14);
  EXPECT_LT(minimality_residual(s, z), 1e-14);
}

TEST(ShapeOperator, CliffordTorusPrincipalCurvatures) {
  const auto G = clifford_torus(square(0, 2 * pi));
  const Vec2 z(0.8, 2.1);
  // Unit normal (cos x, sin x, -cos y, -sin y) / sqrt 2.
  Vec eta(4);
  eta << std::cos(z.x()), std::sin(z.x()), -std::cos(z.y()), -std::sin(z.y());
  eta /= std::numbers::sqrt2;
  const Mat2 a = shape_operator(G, z, eta);
  EXPECT_NEAR(a.determinant(), -1.0, 1e-12);
  EXPECT_NEAR(a(0, 0), -1.0, 1e-12);
  EXPECT_NEAR(a(1, 1), 1.0, 1e-12);
  EXPECT_LT(minimality_residual(G, z), 1e-8);
}

TEST(ShapeOperator, SingularMetricAtBranchPoint) {
  const auto s = bryant_z5_z2();
  EXPECT_EQ(test::error_kind_of([&] { shape_operator(s, Vec2::Zero(), Vec::Unit(5, 0)); }),
            ErrorKind::SingularMetric);
}

TEST(ShapeOperator, SymmetricAndTraceFreeForEveryNormal) {
  std::mt19937_64 rng(3);
  for (const auto& s : gallery_surfaces()) {
    for (const Vec2& z : regular_samples(s, 50, rng)) {
      const auto frame = normal_frame(s, z);
      for (const auto& eta : frame.eta) {
        const auto check = shape_operator_check(s, z, eta.v);
        EXPECT_LT(check.asymmetry, 1e-8) << s.name();
        EXPECT_LT(check.trace, 1e-6) << s.name();
      }
    }
  }
}

TEST(NormalFrame, GramMatrixAndQuadricConstraint) {
  std::mt19937_64 rng(4);
  for (const auto& s : gallery_surfaces()) {
    for (const Vec2& z : regular_samples(s, 200, rng)) {
      EXPECT_LT(frame_gram_residual(s, z), 1e-8) << s.name();
      EXPECT_LT(quadric_residual(s, z), 1e-10) << s.name();
      EXPECT_LT(minimality_residual(s, z), 1e-6) << s.name();
    }
  }
}

TEST(NormalFrame, TimelikeMemberFlaggedInDeSitter) {
  const auto s = conformal_gauss_map(clifford_torus(square(0, 2 * pi)));
  const auto f = normal_frame(s, Vec2(0.5, 0.5));
  ASSERT_EQ(f.norm_sign.size(), 2u);
  EXPECT_EQ(f.norm_sign[0], -1.0);
  EXPECT_EQ(f.norm_sign[1], 1.0);
}

TEST(ConnectionForm, ConstantNormalGivesZero) {
  // Frame ((G, 0), e5): eta4 is constant, so omega34 = <d eta3, e5> = 0.
  const auto g = gauss_map_in_s4(clifford_torus(square(0, 2 * pi)));
  for (const Vec2& X : {Vec2(1, 0), Vec2(0, 1), Vec2(0.3, -0.7)})
    EXPECT_NEAR(connection_form_34(g, Vec2(0.7, 1.9), X), 0.0, 1e-14);
}

TEST(ConnectionForm, BryantAntisymmetryAndRoutesAgree) {
  const auto s = bryant_z5_z2();
  std::mt19937_64 rng(6);
  for (const Vec2& z : regular_samples(s, 20, rng)) {
    const Vec2 X(1, 0);
    const double exact = connection_form_34(s, z, X, FrameRoute::Exact);
    const double fd = connection_form_34(s, z, X, FrameRoute::FiniteDifference);
    EXPECT_NEAR(exact, fd, 1e-6);
    EXPECT_NEAR(connection_form_fd(s, z, X, 0, 1), -connection_form_fd(s, z, X, 1, 0), 1e-6);
    // Linear in X.
    const double y = connection_form_34(s, z, Vec2(0, 1));
    EXPECT_NEAR(connection_form_34(s, z, Vec2(2, -3)), 2 * exact - 3 * y, 1e-12);
  }
}

TEST(Minimality, BryantSurfaceAtRadiusHalf) {
  const auto s = bryant_z5_z2();
  for (int k = 0; k < 8; ++k) {
    const double a = 2 * pi * k / 8;
    EXPECT_LT(minimality_residual(s, Vec2(0.5 * std::cos(a), 0.5 * std::sin(a))), 1e-6);
  }
}

TEST(Minimality, DetectsNonMinimalSurface) {
  // A small sphere of S^3 at latitude 0.5, conformally parametrized; umbilic but not minimal.
  auto f = [](const auto& x, const auto& y) {
    using S = std::decay_t<decltype(x)>;
    const double c = std::cos(0.5), s = std::sin(0.5);
    const S r2 = x * x + y * y;
    const S inv = 1.0 / (1.0 + r2);
    return std::array{s * 2.0 * x * inv, s * 2.0 * y * inv, s * (1.0 - r2) * inv, S(c)};
  };
  const auto s = BranchedSurface(
      "latitude", AmbientSpace::sphere(4), [f](const Vec2& z) { return jet2_of(f, z); }, square(-1, 1));
  const Vec2 z(0.1, 0.2);
  EXPECT_LT(conformal_factor(s, z).residual, 1e-12);
  EXPECT_NEAR(minimality_residual(s, z), std::cos(0.5) / std::sin(0.5), 1e-9);
}

TEST(FiniteDifferenceSurface, MatchesExactJets) {
  const auto exact = clifford_torus(square(0, 2 * pi));
  const auto fd = BranchedSurface::from_values(
      "clifford-fd", AmbientSpace::sphere(4), [&](const Vec2& z) { return exact.value(z); }, exact.domain());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Vec2 z = exact.domain().sample(rng);
    const Jet2Point a = exact.jet(z), b = fd.jet(z);
    for (int k = 0; k < 2; ++k) EXPECT_LT((a.d1[k] - b.d1[k]).norm(), 1e-8);
    for (int k = 0; k < 3; ++k) EXPECT_LT((a.d2[k] - b.d2[k]).norm(), 1e-5);
    EXPECT_LT(conformal_factor(fd, z).residual, 1e-8);
  }
}

TEST(SurfaceCsv, HeaderAndRows) {
  const auto s = equatorial_sphere(square(-1, 1));
  std::ostringstream out;
  write_surface_csv(s, {Vec2(0, 0), Vec2(0.5, 0.5)}, out);
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header.rfind("x,y,", 0), 0u);
  int rows = 0;
  while (std::getline(in, row))
    if (!row.empty()) ++rows;
  EXPECT_EQ(rows, 2);
}
