#pragma once

#include "polarmap/core/complex.hpp"

namespace polarmap {

// q = w + x i + y j + z k.
template <class S>
struct Quaternion {
  S w{};
  S x{};
  S y{};
  S z{};

  Quaternion() = default;
  Quaternion(const S& w_, const S& x_, const S& y_, const S& z_) : w(w_), x(x_), y(y_), z(z_) {}

  // a + b j with complex a, b; (c + d i) j = c j + d k.
  static Quaternion from_pair(const Cx<S>& a, const Cx<S>& b) {
    return Quaternion(a.re, a.im, b.re, b.im);
  }
};

template <class S>
Quaternion<S> operator*(const Quaternion<S>& p, const Quaternion<S>& q) {
  return Quaternion<S>(p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
                       p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
                       p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
                       p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w);
}
template <class S>
Quaternion<S> operator+(const Quaternion<S>& p, const Quaternion<S>& q) {
  return Quaternion<S>(p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z);
}
template <class S>
Quaternion<S> operator-(const Quaternion<S>& p, const Quaternion<S>& q) {
  return Quaternion<S>(p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z);
}
template <class S>
Quaternion<S> conj(const Quaternion<S>& q) {
  return Quaternion<S>(q.w, -q.x, -q.y, -q.z);
}
template <class S>
S norm2(const Quaternion<S>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
template <class S>
Quaternion<S> inverse(const Quaternion<S>& q) {
  const S inv = 1.0 / norm2(q);
  return Quaternion<S>(q.w * inv, -q.x * inv, -q.y * inv, -q.z * inv);
}

}  // namespace polarmap
