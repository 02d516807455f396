#pragma once

// Jets of maps from a 2-dimensional parameter domain into an ambient space.
//
// Second derivatives are stored once per unordered index pair, indexed by the
// number of y-derivatives: d2 = (xx, xy, yy), d3 = (xxx, xxy, xyy, yyy).

#include <array>
#include <functional>
#include <vector>

#include "polarmap/core/dual.hpp"
#include "polarmap/core/types.hpp"

namespace polarmap {

struct Jet2Point {
  Vec value;
  std::array<Vec, 2> d1;
  std::array<Vec, 3> d2;

  const Vec& dd(int i, int j) const { return d2[i + j]; }
};

struct Jet3Point {
  Vec value;
  std::array<Vec, 2> d1;
  std::array<Vec, 3> d2;
  std::array<Vec, 4> d3;

  const Vec& dd(int i, int j) const { return d2[i + j]; }
  const Vec& ddd(int i, int j, int k) const { return d3[i + j + k]; }
  Jet2Point jet2() const { return {value, d1, d2}; }
};

/// Vector value with P first partial derivatives.
template <int P>
struct VJet {
  Vec v;
  std::array<Vec, P> d;
};

/// Scalar value with gradient and Hessian in two variables.
struct ScalarJet2 {
  double v = 0.0;
  Vec2 d = Vec2::Zero();
  Mat2 dd = Mat2::Zero();
};

// Extraction from nested duals -------------------------------------------------

template <class C>
Jet2Point extract_jet2(const C& f) {
  const int n = static_cast<int>(f.size());
  Jet2Point j;
  j.value.resize(n);
  for (auto& v : j.d1) v.resize(n);
  for (auto& v : j.d2) v.resize(n);
  for (int c = 0; c < n; ++c) {
    j.value[c] = f[c].v.v;
    for (int i = 0; i < 2; ++i) j.d1[i][c] = f[c].v.d[i];
    j.d2[0][c] = f[c].d[0].d[0];
    j.d2[1][c] = f[c].d[0].d[1];
    j.d2[2][c] = f[c].d[1].d[1];
  }
  return j;
}

template <class C>
Jet3Point extract_jet3(const C& f) {
  const int n = static_cast<int>(f.size());
  Jet3Point j;
  j.value.resize(n);
  for (auto& v : j.d1) v.resize(n);
  for (auto& v : j.d2) v.resize(n);
  for (auto& v : j.d3) v.resize(n);
  for (int c = 0; c < n; ++c) {
    j.value[c] = f[c].v.v.v;
    for (int i = 0; i < 2; ++i) j.d1[i][c] = f[c].v.v.d[i];
    j.d2[0][c] = f[c].v.d[0].d[0];
    j.d2[1][c] = f[c].v.d[0].d[1];
    j.d2[2][c] = f[c].v.d[1].d[1];
    j.d3[0][c] = f[c].d[0].d[0].d[0];
    j.d3[1][c] = f[c].d[0].d[0].d[1];
    j.d3[2][c] = f[c].d[0].d[1].d[1];
    j.d3[3][c] = f[c].d[1].d[1].d[1];
  }
  return j;
}

template <class C>
VJet<2> extract_vjet1(const C& f) {
  const int n = static_cast<int>(f.size());
  VJet<2> j;
  j.v.resize(n);
  for (auto& v : j.d) v.resize(n);
  for (int c = 0; c < n; ++c) {
    j.v[c] = f[c].v;
    for (int i = 0; i < 2; ++i) j.d[i][c] = f[c].d[i];
  }
  return j;
}

/// Evaluates a generic closed-form map f(x, y) at the order needed.
template <class F>
Jet2Point jet2_of(F&& f, const Vec2& z) {
  return extract_jet2(f(make_variable<D2x2>(z.x(), 0), make_variable<D2x2>(z.y(), 1)));
}
template <class F>
Jet3Point jet3_of(F&& f, const Vec2& z) {
  return extract_jet3(f(make_variable<D3x2>(z.x(), 0), make_variable<D3x2>(z.y(), 1)));
}

// Lifting stored jets back into nested duals ------------------------------------

D1x2 lift1(double v, double dx, double dy);
std::vector<D1x2> lift1(const VJet<2>& j);
std::vector<D2x2> lift2(const Jet2Point& j);
std::vector<D3x2> lift3(const Jet3Point& j);

// Finite-difference fallback ------------------------------------------------------

/// Central differences with one Richardson level; h1 for first and h2 for
/// second derivatives.
Jet2Point jet2_from_values(const std::function<Vec(const Vec2&)>& f, const Vec2& z, double h1, double h2);

}  // namespace polarmap
