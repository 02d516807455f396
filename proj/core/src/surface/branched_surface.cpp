#include "polarmap/surface/branched_surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polarmap/core/errors.hpp"

namespace polarmap {

Domain Domain::box(const Vec2& lo, const Vec2& hi) {
  require(lo.x() < hi.x() && lo.y() < hi.y(), ErrorKind::ContractViolation, "empty domain box");
  Domain d;
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

Domain Domain::disc(const Vec2& center, double radius) {
  require(radius > 0.0, ErrorKind::ContractViolation, "disc radius must be positive");
  Domain d;
  d.disc_ = true;
  d.radius_ = radius;
  d.lo_ = center - Vec2::Constant(radius);
  d.hi_ = center + Vec2::Constant(radius);
  return d;
}

Vec2 Domain::center() const { return 0.5 * (lo_ + hi_); }

bool Domain::contains(const Vec2& z) const {
  if (disc_) return (z - center()).norm() < radius_;
  return z.x() >= lo_.x() && z.x() <= hi_.x() && z.y() >= lo_.y() && z.y() <= hi_.y();
}

Vec2 Domain::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (disc_) {
    const double r = radius_ * std::sqrt(u(rng));
    const double a = 2.0 * std::numbers::pi * u(rng);
    return center() + r * Vec2(std::cos(a), std::sin(a));
  }
  return Vec2(lo_.x() + (hi_.x() - lo_.x()) * u(rng), lo_.y() + (hi_.y() - lo_.y()) * u(rng));
}

namespace {

std::vector<int> choose_seeds(const BranchedSurface& s) {
  const auto& space = s.ambient();
  Vec2 zref = s.domain().center();
  const double scale = std::max(1e-3, 0.1 * (s.domain().hi() - s.domain().lo()).minCoeff());
  for (int k = 0; k < 8; ++k) {
    const auto bp = s.nearest_branch_point(zref);
    if (!bp || (zref - bp->z).norm() > 1e-6) break;
    zref += Vec2(0.37, 0.21) * scale;
  }
  const Jet2Point j = s.jet(zref);
  std::vector<Vec> basis;
  std::vector<double> signs;
  auto add = [&](Vec v) {
    for (std::size_t i = 0; i < basis.size(); ++i) v -= inner(v, basis[i], space) * signs[i] * basis[i];
    const double n2 = inner(v, v, space);
    if (std::abs(n2) < 1e-24) return false;
    basis.push_back(v / std::sqrt(std::abs(n2)));
    signs.push_back(n2 > 0 ? 1.0 : -1.0);
    return true;
  };
  if (space.has_quadric()) add(j.value);
  add(j.d1[0]);
  add(j.d1[1]);
  std::vector<int> seeds;
  const int n = space.dimension();
  for (int c = 0; c < s.codimension(); ++c) {
    int best = -1;
    double best_norm = -1.0;
    for (int k = 0; k < n; ++k) {
      if (std::find(seeds.begin(), seeds.end(), k) != seeds.end()) continue;
      Vec e = Vec::Zero(n);
      e[k] = 1.0;
      for (std::size_t i = 0; i < basis.size(); ++i) e -= inner(e, basis[i], space) * signs[i] * basis[i];
      const double nrm = e.norm();
      if (nrm > best_norm + 1e-12) {
        best_norm = nrm;
        best = k;
      }
    }
    Vec e = Vec::Zero(n);
    e[best] = 1.0;
    add(e);
    seeds.push_back(best);
  }
  return seeds;
}

}  // namespace

BranchedSurface::BranchedSurface(std::string name, AmbientSpace ambient, Jet2Fn jet2, Domain domain,
                                 std::vector<BranchPoint> branch_points)
    : name_(std::move(name)),
      ambient_(std::move(ambient)),
      jet2_(std::move(jet2)),
      domain_(std::move(domain)),
      branch_points_(std::move(branch_points)) {
  for (const auto& bp : branch_points_)
    require(bp.order >= 1, ErrorKind::ContractViolation, "branch order must be positive");
  seeds_ = std::make_shared<const std::vector<int>>(choose_seeds(*this));
}

BranchedSurface BranchedSurface::from_jet3(std::string name, AmbientSpace ambient, Jet3Fn jet3, Domain domain,
                                           std::vector<BranchPoint> branch_points) {
  auto j2 = [jet3](const Vec2& z) { return jet3(z).jet2(); };
  BranchedSurface s(std::move(name), std::move(ambient), j2, std::move(domain), std::move(branch_points));
  s.jet3_ = std::move(jet3);
  return s;
}

BranchedSurface BranchedSurface::from_jets(std::string name, AmbientSpace ambient, Jet2Fn jet2, Jet3Fn jet3,
                                           Domain domain, std::vector<BranchPoint> branch_points) {
  BranchedSurface s(std::move(name), std::move(ambient), std::move(jet2), std::move(domain),
                    std::move(branch_points));
  s.jet3_ = std::move(jet3);
  return s;
}

BranchedSurface BranchedSurface::from_values(std::string name, AmbientSpace ambient,
                                             std::function<Vec(const Vec2&)> f, Domain domain,
                                             std::vector<BranchPoint> branch_points, const Tolerances& tol) {
  const double h1 = tol.jet_fd_step;
  const double h2 = tol.jet_fd_step2;
  auto j2 = [f = std::move(f), h1, h2](const Vec2& z) { return jet2_from_values(f, z, h1, h2); };
  return BranchedSurface(std::move(name), std::move(ambient), j2, std::move(domain), std::move(branch_points));
}

BranchedSurface BranchedSurface::with_frame(FrameFn frame) const {
  BranchedSurface s = *this;
  s.frame_ = std::move(frame);
  return s;
}

Jet3Point BranchedSurface::jet3(const Vec2& z) const {
  require(has_jet3(), ErrorKind::Unsupported, name_ + " has no third-order jet");
  return jet3_(z);
}

int BranchedSurface::codimension() const {
  return ambient_.dimension() - 2 - (ambient_.has_quadric() ? 1 : 0);
}

const std::vector<int>& BranchedSurface::frame_seeds() const { return *seeds_; }

std::optional<BranchPoint> BranchedSurface::nearest_branch_point(const Vec2& z) const {
  std::optional<BranchPoint> best;
  double d = std::numeric_limits<double>::infinity();
  for (const auto& bp : branch_points_) {
    const double dz = (z - bp.z).norm();
    if (dz < d) {
      d = dz;
      best = bp;
    }
  }
  return best;
}

double BranchedSurface::branch_weight(const Vec2& z) const {
  const auto bp = nearest_branch_point(z);
  if (!bp) return 1.0;
  return std::pow((z - bp->z).norm(), 2 * bp->order);
}

}  // namespace polarmap
