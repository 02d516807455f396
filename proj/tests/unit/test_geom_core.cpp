#include <atomic>
#include <cmath>
#include <numbers>
#include <vector>

#include "polarmap/core/ambient.hpp"
#include "polarmap/core/dual.hpp"
#include "polarmap/core/finite_diff.hpp"
#include "polarmap/core/jet.hpp"
#include "polarmap/core/linalg.hpp"
#include "polarmap/core/parallel.hpp"
#include "polarmap/core/penrose.hpp"
#include "polarmap/core/quaternion.hpp"
#include "support.hpp"

using namespace polarmap;
using polarmap::test::random_vec;
using polarmap::test::uniform;

TEST(Inner, IndexOneBasis) {
  const Vec e1 = Vec::Unit(5, 0);
  const Vec e2 = Vec::Unit(5, 1);
  EXPECT_EQ(inner(e1, e1, 1), -1.0);
  EXPECT_EQ(inner(e2, e2, 1), 1.0);
  Vec v(5), w(5);
  v << 1, 1, 0, 0, 0;
  w << 1, 2, 0, 0, 0;
  EXPECT_EQ(inner(v, w, AmbientSpace::minkowski5()), 1.0);
}

TEST(Inner, DimensionMismatch) {
  EXPECT_EQ(test::error_kind_of([] { inner(Vec::Zero(4), Vec::Zero(4), AmbientSpace::minkowski5()); }),
            ErrorKind::ContractViolation);
  EXPECT_EQ(test::error_kind_of([] { inner(Vec::Zero(4), Vec::Zero(5), 0); }), ErrorKind::ContractViolation);
}

TEST(Inner, SymmetricAndBilinear) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int s = trial % 2;
    const Vec u = random_vec(rng, 5, 3.0);
    const Vec v = random_vec(rng, 5, 3.0);
    const Vec w = random_vec(rng, 5, 3.0);
    const double a = uniform(rng, -2, 2);
    EXPECT_NEAR(inner(u, v, s), inner(v, u, s), 1e-12);
    EXPECT_NEAR(inner(a * u + w, v, s), a * inner(u, v, s) + inner(w, v, s), 1e-11);
  }
}

TEST(Ambient, SpacesAndQuadrics) {
  EXPECT_EQ(AmbientSpace::hyperbolic4().curvature(), -1.0);
  EXPECT_EQ(AmbientSpace::sphere(5).curvature(), 1.0);
  EXPECT_EQ(AmbientSpace::euclidean(4).curvature(), 0.0);
  EXPECT_TRUE(AmbientSpace::hyperbolic4().upper_sheet());
  Vec x = Vec::Zero(5);
  x[0] = 1.0;
  EXPECT_EQ(AmbientSpace::hyperbolic4().quadric_residual(x), 0.0);
  EXPECT_GT(AmbientSpace::hyperbolic4().quadric_residual(-x), 1.0);  // lower sheet
  EXPECT_EQ(test::error_kind_of([] { AmbientSpace::de_sitter4().curvature(); }), ErrorKind::ContractViolation);
}

TEST(Dual, NestedDerivativesMatchClosedForm) {
  // f = sin(x) exp(x y): check value, gradient, Hessian and one third derivative.
  const double x0 = 0.7, y0 = -0.3;
  auto f = [](const auto& x, const auto& y) { return sin(x) * exp(x * y); };
  const D3x2 r = f(make_variable<D3x2>(x0, 0), make_variable<D3x2>(y0, 1));
  const double e = std::exp(x0 * y0), s = std::sin(x0), c = std::cos(x0);
  EXPECT_NEAR(r.v.v.v, s * e, 1e-15);
  EXPECT_NEAR(r.v.v.d[0], (c + y0 * s) * e, 1e-14);
  EXPECT_NEAR(r.v.v.d[1], x0 * s * e, 1e-14);
  EXPECT_NEAR(r.v.d[1].d[1], x0 * x0 * s * e, 1e-14);
  EXPECT_NEAR(r.v.d[0].d[1], (s + x0 * c + x0 * y0 * s) * e, 1e-14);
  EXPECT_NEAR(r.d[1].d[1].d[1], x0 * x0 * x0 * s * e, 1e-14);
  // Mixed partials agree structurally.
  EXPECT_EQ(r.v.d[0].d[1], r.v.d[1].d[0]);
}

TEST(Dual, AgreesWithFiniteDifferences) {
  std::mt19937_64 rng(5);
  auto f = [](const auto& x) { return cosh(x) / (1.0 + x * x) + sqrt(2.0 + sinh(x)) * log(3.0 + x); };
  for (int trial = 0; trial < 100; ++trial) {
    const double x = uniform(rng, -1.0, 1.0);
    const D1x2 d = f(make_variable<D1x2>(x, 0));
    const double fd = fd::d1_5pt([&](double h) { return f(x + h); }, 1e-3);
    EXPECT_NEAR(d.d[0], fd, 1e-9);
  }
}

TEST(Quaternion, NormMultiplicativeAndAssociative) {
  std::mt19937_64 rng(17);
  auto q = [&] {
    return Quaternion<double>(uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2));
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = q(), r = q(), s = q();
    EXPECT_NEAR(std::sqrt(norm2(p * r)), std::sqrt(norm2(p)) * std::sqrt(norm2(r)), 1e-12 * (1 + norm2(p * r)));
    const auto lhs = (p * r) * s;
    const auto rhs = p * (r * s);
    EXPECT_NEAR(norm2(lhs - rhs), 0.0, 1e-20 * (1 + norm2(lhs)) + 1e-24);
  }
  // i j = k, j i = -k.
  const Quaternion<double> i(0, 1, 0, 0), j(0, 0, 1, 0);
  EXPECT_EQ((i * j).z, 1.0);
  EXPECT_EQ((j * i).z, -1.0);
}

namespace {

using C4 = std::array<std::complex<double>, 4>;

// Second implementation of the identification: q = q1^{-1} q2 in the affine
// chart of HP^1, then inverse stereographic projection from -e5.
Vec chart_oracle(const C4& p) {
  const Quaternion<double> q1(p[0].real(), p[0].imag(), p[1].real(), p[1].imag());
  const Quaternion<double> q2(p[2].real(), p[2].imag(), p[3].real(), p[3].imag());
  const auto q = inverse(q1) * q2;
  const double n = norm2(q);
  Vec out(5);
  out << 2 * q.w, 2 * q.x, 2 * q.y, 2 * q.z, 1 - n;
  return out / (1 + n);
}

}  // namespace

TEST(Penrose, ChartCentreIsThePole) {
  const Vec x = penrose_project(C4{1.0, 0.0, 0.0, 0.0});
  EXPECT_TRUE(x.isApprox(Vec::Unit(5, 4)));
}

TEST(Penrose, EquatorialPointAgreesWithChartOracle) {
  const C4 p{1.0, 0.0, 1.0, 0.0};
  const Vec x = penrose_project(p);
  EXPECT_NEAR(x.norm(), 1.0, 1e-15);
  EXPECT_NEAR(x[4], 0.0, 1e-15);
  EXPECT_LT((x - chart_oracle(p)).norm(), 1e-14);
}

TEST(Penrose, ZeroIsADomainError) {
  EXPECT_EQ(test::error_kind_of([] { penrose_project(C4{0.0, 0.0, 0.0, 0.0}); }), ErrorKind::DomainError);
}

TEST(Penrose, UnitNormScaleInvariantAndChartConsistent) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    C4 p;
    for (auto& c : p) c = test::random_complex(rng, 2.0);
    const std::complex<double> lambda = test::random_complex(rng, 3.0) + std::complex<double>(0.01, 0.0);
    C4 lp;
    for (int i = 0; i < 4; ++i) lp[i] = lambda * p[i];
    const Vec x = penrose_project(p);
    EXPECT_NEAR(x.norm(), 1.0, 1e-13);
    EXPECT_LT((x - penrose_project(lp)).norm(), 1e-12);
    EXPECT_LT((x - chart_oracle(p)).norm(), 1e-10);
  }
}

TEST(Penrose, FiberDirectionIsTheFiber) {
  // Moving along j.z stays in the same quaternionic line, so the projection
  // does not move to first order.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    C4 z;
    for (auto& c : z) c = test::random_complex(rng);
    const C4 v = twistor_fiber_direction(z);
    auto at = [&](double s) {
      C4 w;
      for (int i = 0; i < 4; ++i) w[i] = z[i] + s * v[i];
      return penrose_project(w);
    };
    EXPECT_LT(fd::d1_5pt(at, 1e-3).norm(), 1e-9);
    EXPECT_GT(horizontality_defect(z, v), 0.0);
    EXPECT_NEAR(horizontality_defect(z, z), 0.0, 1e-14);
  }
}

TEST(Eigen, TwoByTwoExamples) {
  const auto d = eigen2_sym((Mat2() << 3, 0, 0, 1).finished());
  EXPECT_EQ(d.values[0], 3.0);
  EXPECT_EQ(d.values[1], 1.0);
  EXPECT_NEAR(std::abs(d.vectors(0, 0)), 1.0, 1e-15);
  const auto s = eigen2_sym((Mat2() << 0, 1, 1, 0).finished());
  EXPECT_NEAR(s.values[0], 1.0, 1e-15);
  EXPECT_NEAR(s.values[1], -1.0, 1e-15);
  const double r = std::numbers::sqrt2 / 2;
  EXPECT_NEAR(std::abs(s.vectors.col(0).dot(Vec2(r, r))), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s.vectors.col(1).dot(Vec2(r, -r))), 1.0, 1e-15);
}

TEST(Eigen, AsymmetricInputRejected) {
  EXPECT_EQ(test::error_kind_of([] { eigen2_sym((Mat2() << 1, 2, 0, 1).finished()); }),
            ErrorKind::ContractViolation);
  EXPECT_EQ(test::error_kind_of([] { eigen3_sym((Mat3() << 1, 2, 0, 0, 1, 0, 0, 0, 1).finished()); }),
            ErrorKind::ContractViolation);
}

TEST(Eigen, RandomSymmetricReconstruction) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const Mat3 m = test::random_sym3(rng);
    const auto e = eigen3_sym(m);
    const Mat3 l = Eigen::Vector3d(e.values[0], e.values[1], e.values[2]).asDiagonal();
    EXPECT_LE((e.vectors * l * e.vectors.transpose() - m).norm(), 1e-10 * std::max(1.0, m.norm()));
    EXPECT_LE((e.vectors.transpose() * e.vectors - Mat3::Identity()).norm(), 1e-10);
    EXPECT_GE(e.values[0], e.values[1]);
    EXPECT_GE(e.values[1], e.values[2]);

    const Mat2 m2 = m.topLeftCorner<2, 2>();
    const auto e2 = eigen2_sym(m2);
    const Mat2 l2 = Eigen::Vector2d(e2.values[0], e2.values[1]).asDiagonal();
    EXPECT_LE((e2.vectors * l2 * e2.vectors.transpose() - m2).norm(), 1e-10 * std::max(1.0, m2.norm()));
  }
}

TEST(Eigen, GeneralizedProblem) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    Mat3 a = test::random_sym3(rng);
    const Mat3 m = a * a.transpose() + Mat3::Identity();
    const Mat3 b = test::random_sym3(rng);
    const auto e = generalized_eigen3(m, b);
    for (int i = 0; i < 3; ++i) {
      const Vec3 v = e.vectors.col(i);
      EXPECT_LT((b * v - e.values[i] * m * v).norm(), 1e-9 * (1 + b.norm()));
      EXPECT_NEAR(v.dot(m * v), 1.0, 1e-10);
    }
  }
  const Mat3 indefinite = Eigen::Vector3d(1, -1, 1).asDiagonal();
  EXPECT_EQ(test::error_kind_of([&] { generalized_eigen3(indefinite, Mat3::Identity()); }),
            ErrorKind::RegularityError);
}

TEST(Jet, FiniteDifferenceFallbackMatchesExactJets) {
  auto f = [](const auto& x, const auto& y) { return std::array{cos(x) * exp(y), x * y * y, sin(x + 2.0 * y)}; };
  auto values = [&](const Vec2& z) {
    const auto a = f(z.x(), z.y());
    Vec v(3);
    v << a[0], a[1], a[2];
    return v;
  };
  const Vec2 z(0.3, -0.4);
  const Jet2Point exact = jet2_of(f, z);
  const Jet2Point approx = jet2_from_values(values, z, 1e-5, 1e-3);
  EXPECT_LT((exact.value - approx.value).norm(), 1e-15);
  for (int i = 0; i < 2; ++i) EXPECT_LT((exact.d1[i] - approx.d1[i]).norm(), 1e-9);
  for (int i = 0; i < 3; ++i) EXPECT_LT((exact.d2[i] - approx.d2[i]).norm(), 1e-6);
}

TEST(Jet, LiftRoundTrip) {
  auto f = [](const auto& x, const auto& y) { return std::array{x * x * y, exp(x - y)}; };
  const Jet3Point j = jet3_of(f, Vec2(0.2, 0.5));
  const Jet2Point back = extract_jet2(lift2(j.jet2()));
  EXPECT_EQ(back.value, j.value);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(back.d2[i], j.d2[i]);
  const Jet3Point back3 = extract_jet3(lift3(j));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(back3.d3[i], j.d3[i]);
}

TEST(Parallel, VisitsEveryIndexOnceAndRethrows) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(100,
                            [](std::size_t i) {
                              if (i == 37) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
  EXPECT_GE(worker_count(), 1u);
}
