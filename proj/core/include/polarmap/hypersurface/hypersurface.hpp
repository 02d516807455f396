#pragma once

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "polarmap/core/ambient.hpp"
#include "polarmap/core/dual.hpp"
#include "polarmap/core/tolerances.hpp"

namespace polarmap {

struct ParamBox {
  Vec3 lo = Vec3::Zero();
  Vec3 hi = Vec3::Ones();

  bool contains(const Vec3& p) const;
  Vec3 width() const { return hi - lo; }
  Vec3 sample(std::mt19937_64& rng) const;
};

/// Position, first derivatives, unit normal and its first derivatives.
struct HyperPoint {
  Vec f;
  std::array<Vec, 3> df;
  Vec xi;
  std::array<Vec, 3> dxi;
};

/// An immersed 3-manifold in R^4, S^4 or H^4 over a parameter box.
class Hypersurface3 {
 public:
  using EvalFn = std::function<HyperPoint(const Vec3&)>;

  Hypersurface3(std::string name, AmbientSpace space, EvalFn eval, ParamBox box);

  /// Builds the evaluator from a closed-form map f(u, v, t) written over a
  /// generic scalar; the unit normal is the signature-raised generalized cross
  /// product of (f_u, f_v, f_t) (and f itself in a quadric), times orientation.
  template <class F>
  static Hypersurface3 closed_form(std::string name, AmbientSpace space, F f, ParamBox box, double orientation = 1.0);

  const std::string& name() const { return name_; }
  const AmbientSpace& space() const { return space_; }
  double curvature() const { return space_.curvature(); }
  const ParamBox& box() const { return box_; }
  HyperPoint eval(const Vec3& p) const { return eval_(p); }
  Vec position(const Vec3& p) const { return eval_(p).f; }
  Hypersurface3 with_box(const ParamBox& box) const;

 private:
  std::string name_;
  AmbientSpace space_;
  EvalFn eval_;
  ParamBox box_;
};

struct HypersurfaceSample {
  Vec3 p;
  Vec position;
  Vec xi;
  Mat3 metric;
  Mat3 second_form;   // b = -df^T S dxi
  Mat3 shape;         // A = metric^{-1} b, from dxi = -df A
  std::array<double, 3> k{};  // descending
  Mat3 frame;         // metric-orthonormal principal directions, column i for k[i]
  double H = 0.0;
  double S = 0.0;
  double K = 0.0;
  Vec3 nullity;       // principal direction of the curvature of least magnitude
  // Structure functions, filled by sample_with_structure.
  std::optional<double> u;
  std::optional<double> v;
};

/// Throws RegularityError when the induced metric is degenerate.
HypersurfaceSample sample(const Hypersurface3& h, const Vec3& p, const Tolerances& tol = {});

/// Mean curvature from finite-difference second derivatives of the position.
double mean_curvature_fd(const Hypersurface3& h, const Vec3& p, double step = 1e-3);

/// max over i of |<xi, df_i>_s|, and |<xi, xi>_s - 1|.
double normal_residual(const HyperPoint& hp, const AmbientSpace& space);

namespace detail {

template <class S>
S det_n(std::vector<std::vector<S>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  S r(0.0);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<S>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[i - 1].push_back(m[i][j]);
    const S term = m[0][c] * det_n(std::move(minor));
    if (c % 2 == 0)
      r += term;
    else
      r -= term;
  }
  return r;
}

/// Generalized cross product of n-1 vectors in R^n (Euclidean), orthogonal to all of them.
template <class S>
std::vector<S> cross(const std::vector<std::vector<S>>& rows) {
  const std::size_t n = rows.front().size();
  std::vector<S> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<std::vector<S>> m(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) m[i].push_back(rows[i][j]);
    const S d = det_n(std::move(m));
    out[k] = ((k + n - 1) % 2 == 0) ? d : S(-d);
  }
  return out;
}

/// Unit normal w.r.t. <,>_s: raise the Euclidean cross product and normalize.
template <class S>
std::vector<S> unit_normal(const std::vector<std::vector<S>>& rows, int s) {
  auto n = cross(rows);
  if (s == 1) n[0] = -n[0];
  S n2 = n[0] * n[0];
  if (s == 1) n2 = -n2;
  for (std::size_t i = 1; i < n.size(); ++i) n2 += n[i] * n[i];
  if (value_of(n2) < 0) n2 = -n2;
  using std::sqrt;
  const S inv = 1.0 / sqrt(n2);
  for (auto& c : n) c *= inv;
  return n;
}

}  // namespace detail

template <class F>
Hypersurface3 Hypersurface3::closed_form(std::string name, AmbientSpace space, F f, ParamBox box, double orientation) {
  const int s = space.signature_index();
  const bool quadric = space.has_quadric();
  auto eval = [f, s, quadric, orientation](const Vec3& p) {
    const auto val = f(make_variable<D2x3>(p[0], 0), make_variable<D2x3>(p[1], 1), make_variable<D2x3>(p[2], 2));
    const int n = static_cast<int>(val.size());
    HyperPoint hp;
    hp.f.resize(n);
    for (auto& d : hp.df) d.resize(n);
    std::vector<std::vector<D1x3>> rows;
    if (quadric) {
      std::vector<D1x3> pos(n);
      for (int c = 0; c < n; ++c) pos[c] = val[c].v;
      rows.push_back(pos);
    }
    for (int i = 0; i < 3; ++i) {
      std::vector<D1x3> di(n);
      for (int c = 0; c < n; ++c) di[c] = val[c].d[i];
      rows.push_back(di);
    }
    for (int c = 0; c < n; ++c) {
      hp.f[c] = val[c].v.v;
      for (int i = 0; i < 3; ++i) hp.df[i][c] = val[c].v.d[i];
    }
    const auto xi = detail::unit_normal(rows, s);
    hp.xi.resize(n);
    for (auto& d : hp.dxi) d.resize(n);
    for (int c = 0; c < n; ++c) {
      hp.xi[c] = orientation * xi[c].v;
      for (int i = 0; i < 3; ++i) hp.dxi[i][c] = orientation * xi[c].d[i];
    }
    return hp;
  };
  return Hypersurface3(std::move(name), std::move(space), eval, box);
}

}  // namespace polarmap
