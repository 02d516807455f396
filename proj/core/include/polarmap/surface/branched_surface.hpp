#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polarmap/core/ambient.hpp"
#include "polarmap/core/jet.hpp"
#include "polarmap/core/tolerances.hpp"

namespace polarmap {

struct BranchPoint {
  Vec2 z;
  int order = 1;
};

class Domain {
 public:
  static Domain box(const Vec2& lo, const Vec2& hi);
  static Domain disc(const Vec2& center, double radius);

  bool contains(const Vec2& z) const;
  Vec2 sample(std::mt19937_64& rng) const;
  Vec2 center() const;
  const Vec2& lo() const { return lo_; }
  const Vec2& hi() const { return hi_; }
  bool is_disc() const { return disc_; }
  double radius() const { return radius_; }

 private:
  Vec2 lo_ = Vec2::Zero();
  Vec2 hi_ = Vec2::Ones();
  bool disc_ = false;
  double radius_ = 0.0;
};

/// A conformally parametrized (possibly branched) surface in a quadric or in R^n.
class BranchedSurface {
 public:
  using Jet2Fn = std::function<Jet2Point(const Vec2&)>;
  using Jet3Fn = std::function<Jet3Point(const Vec2&)>;
  /// Explicit normal frame with first derivatives, ordered (eta3, eta4).
  using FrameFn = std::function<std::vector<VJet<2>>(const Vec2&)>;

  BranchedSurface(std::string name, AmbientSpace ambient, Jet2Fn jet2, Domain domain,
                  std::vector<BranchPoint> branch_points = {});
  static BranchedSurface from_jet3(std::string name, AmbientSpace ambient, Jet3Fn jet3, Domain domain,
                                   std::vector<BranchPoint> branch_points = {});
  /// Separate second- and third-order evaluators, for when the third-order
  /// scalar type is much more expensive than the second.
  static BranchedSurface from_jets(std::string name, AmbientSpace ambient, Jet2Fn jet2, Jet3Fn jet3, Domain domain,
                                   std::vector<BranchPoint> branch_points = {});
  /// Finite-difference wrapper for surfaces given by values only.
  static BranchedSurface from_values(std::string name, AmbientSpace ambient, std::function<Vec(const Vec2&)> f,
                                     Domain domain, std::vector<BranchPoint> branch_points = {},
                                     const Tolerances& tol = {});

  BranchedSurface with_frame(FrameFn frame) const;

  const std::string& name() const { return name_; }
  const AmbientSpace& ambient() const { return ambient_; }
  const Domain& domain() const { return domain_; }
  const std::vector<BranchPoint>& branch_points() const { return branch_points_; }

  Jet2Point jet(const Vec2& z) const { return jet2_(z); }
  Vec value(const Vec2& z) const { return jet2_(z).value; }
  bool has_jet3() const { return static_cast<bool>(jet3_); }
  Jet3Point jet3(const Vec2& z) const;
  bool has_frame() const { return static_cast<bool>(frame_); }
  std::vector<VJet<2>> explicit_frame(const Vec2& z) const { return frame_(z); }

  /// Number of normal directions inside the target (quadric or R^n).
  int codimension() const;

  /// Standard basis indices used to seed Gram-Schmidt, chosen once at a
  /// reference point so that the frame is continuous across the chart.
  const std::vector<int>& frame_seeds() const;

  /// Declared branch point closest to z, if any.
  std::optional<BranchPoint> nearest_branch_point(const Vec2& z) const;
  /// |z - z0|^{2m} for the nearest declared branch point, 1 when none.
  double branch_weight(const Vec2& z) const;

 private:
  std::string name_;
  AmbientSpace ambient_;
  Jet2Fn jet2_;
  Jet3Fn jet3_;
  FrameFn frame_;
  Domain domain_;
  std::vector<BranchPoint> branch_points_;
  std::shared_ptr<const std::vector<int>> seeds_;
};

}  // namespace polarmap
