#include "polarmap/gallery/surfaces.hpp"

#include <cmath>
#include <numbers>

#include "polarmap/core/complex.hpp"
#include "polarmap/core/errors.hpp"
#include "polarmap/hypersurface/hypersurface.hpp"
#include "polarmap/surface/analysis.hpp"

namespace polarmap {

BranchedSurface clifford_torus(const Domain& domain) {
  auto f = [](const auto& x, const auto& y) {
    using std::cos, std::sin;
    const double r = std::numbers::sqrt2 / 2.0;
    return std::array{r * cos(x), r * sin(x), r * cos(y), r * sin(y)};
  };
  auto j2 = [f](const Vec2& z) { return jet2_of(f, z); };
  auto j3 = [f](const Vec2& z) { return jet3_of(f, z); };
  return BranchedSurface::from_jets("clifford", AmbientSpace::sphere(4), j2, j3, domain);
}

BranchedSurface equatorial_sphere(const Domain& domain) {
  auto f = [](const auto& x, const auto& y) {
    using S = std::decay_t<decltype(x)>;
    const S r2 = x * x + y * y;
    const S inv = 1.0 / (1.0 + r2);
    return std::array{2.0 * x * inv, 2.0 * y * inv, (1.0 - r2) * inv, S(0.0)};
  };
  auto j2 = [f](const Vec2& z) { return jet2_of(f, z); };
  auto j3 = [f](const Vec2& z) { return jet3_of(f, z); };
  return BranchedSurface::from_jets("equator", AmbientSpace::sphere(4), j2, j3, domain);
}

BranchedSurface synthetic_branched(const Domain& domain) {
  auto f = [](const auto& x, const auto& y) {
    using S = std::decay_t<decltype(x)>;
    const Cx<S> z(x, y);
    const Cx<S> z3 = z * z * z;
    const Cx<S> z4 = z3 * z;
    return std::array{z3.re / 3.0, z3.im / 3.0, z4.re / 4.0, z4.im / 4.0};
  };
  auto j2 = [f](const Vec2& z) { return jet2_of(f, z); };
  auto j3 = [f](const Vec2& z) { return jet3_of(f, z); };
  return BranchedSurface::from_jets("synthetic-m2", AmbientSpace::euclidean(4), j2, j3, domain,
                                    {BranchPoint{Vec2::Zero(), 2}});
}

namespace {

bool in_s3(const BranchedSurface& s) {
  const auto& a = s.ambient();
  return a.dimension() == 4 && a.signature_index() == 0 && a.has_quadric() && a.quadric_constant() > 0;
}

// Unit normal in S^3 with two derivatives: orthogonal to G, G_x, G_y.
std::array<D2x2, 4> s3_normal(const Jet3Point& j) {
  const auto g = lift3(j);
  std::vector<std::vector<D2x2>> rows(3, std::vector<D2x2>(4));
  for (int c = 0; c < 4; ++c) {
    rows[0][c] = g[c].v;
    rows[1][c] = g[c].d[0];
    rows[2][c] = g[c].d[1];
  }
  const auto n = detail::unit_normal(rows, 0);
  return {n[0], n[1], n[2], n[3]};
}

std::vector<Vec2> probe_points(const BranchedSurface& s) {
  std::vector<Vec2> out;
  const Vec2 c = s.domain().center();
  const Vec2 w = s.domain().hi() - s.domain().lo();
  for (const Vec2& off : {Vec2(0.13, 0.07), Vec2(-0.21, 0.17), Vec2(0.05, -0.23)}) {
    const Vec2 z = c + Vec2(off.x() * w.x(), off.y() * w.y());
    if (s.domain().contains(z)) out.push_back(z);
  }
  return out;
}

void require_nondegenerate(const BranchedSurface& G, const char* what) {
  for (const Vec2& z : probe_points(G)) {
    const auto n = s3_normal(G.jet3(z));
    double e = 0.0;
    for (const auto& c : n) e += c.v.d[0] * c.v.d[0];
    if (e > 1e-12) return;
  }
  fail(ErrorKind::DegenerateSurface, what);
}

VJet<2> vjet_of(const Jet3Point& j, int pad_front, int pad_back) {
  const int n = static_cast<int>(j.value.size()) + pad_front + pad_back;
  VJet<2> out{Vec::Zero(n), {Vec::Zero(n), Vec::Zero(n)}};
  out.v.segment(pad_front, j.value.size()) = j.value;
  for (int i = 0; i < 2; ++i) out.d[i].segment(pad_front, j.value.size()) = j.d1[i];
  return out;
}

}  // namespace

BranchedSurface gauss_map_of_s3_minimal(const BranchedSurface& G) {
  require(in_s3(G), ErrorKind::ContractViolation, "Gauss map needs a surface in S^3");
  require(G.has_jet3(), ErrorKind::Unsupported, "Gauss map needs third-order jets");
  require_nondegenerate(G, "totally geodesic surface has a constant Gauss map");
  auto jet = [G](const Vec2& z) { return extract_jet2(s3_normal(G.jet3(z))); };
  auto frame = [G](const Vec2& z) { return std::vector<VJet<2>>{vjet_of(G.jet3(z), 0, 0)}; };
  return BranchedSurface(G.name() + "-gauss", AmbientSpace::sphere(4), jet, G.domain(), G.branch_points())
      .with_frame(frame);
}

BranchedSurface gauss_map_in_s4(const BranchedSurface& G) {
  require(in_s3(G), ErrorKind::ContractViolation, "Gauss map needs a surface in S^3");
  require(G.has_jet3(), ErrorKind::Unsupported, "Gauss map needs third-order jets");
  require_nondegenerate(G, "totally geodesic surface has a constant Gauss map");
  auto jet = [G](const Vec2& z) {
    const auto n = s3_normal(G.jet3(z));
    return extract_jet2(std::array<D2x2, 5>{n[0], n[1], n[2], n[3], D2x2(0.0)});
  };
  auto frame = [G](const Vec2& z) {
    VJet<2> e5{Vec::Unit(5, 4), {Vec::Zero(5), Vec::Zero(5)}};
    return std::vector<VJet<2>>{vjet_of(G.jet3(z), 0, 1), e5};
  };
  return BranchedSurface(G.name() + "-gauss-s4", AmbientSpace::sphere(5), jet, G.domain(), G.branch_points())
      .with_frame(frame);
}

BranchedSurface conformal_gauss_map(const BranchedSurface& h) {
  require(in_s3(h), ErrorKind::ContractViolation, "conformal Gauss map needs a surface in S^3");
  require(h.has_jet3(), ErrorKind::Unsupported, "conformal Gauss map needs third-order jets");
  for (const Vec2& z : probe_points(h))
    require(minimality_residual(h, z) < 1e-6, ErrorKind::Unsupported,
            "conformal Gauss map is only implemented for minimal surfaces");
  require_nondegenerate(h, "totally umbilical surface: the conformal Gauss map degenerates");
  auto jet = [h](const Vec2& z) {
    const auto n = s3_normal(h.jet3(z));
    return extract_jet2(std::array<D2x2, 5>{D2x2(0.0), n[0], n[1], n[2], n[3]});
  };
  auto frame = [h](const Vec2& z) {
    VJet<2> e1{Vec::Unit(5, 0), {Vec::Zero(5), Vec::Zero(5)}};
    return std::vector<VJet<2>>{e1, vjet_of(h.jet3(z), 1, 0)};
  };
  return BranchedSurface(h.name() + "-conformal-gauss", AmbientSpace::de_sitter4(), jet, h.domain(),
                         h.branch_points())
      .with_frame(frame);
}

}  // namespace polarmap
