#pragma once

// Complex numbers over an arbitrary real scalar, so that holomorphic
// expressions can be differentiated with Dual scalars.

#include <complex>

namespace polarmap {

template <class S>
struct Cx {
  S re{};
  S im{};

  Cx() = default;
  Cx(const S& r, const S& i) : re(r), im(i) {}
  explicit Cx(const S& r) : re(r), im(0.0) {}
  static Cx from(std::complex<double> c) { return Cx(S(c.real()), S(c.imag())); }

  Cx& operator+=(const Cx& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Cx& operator-=(const Cx& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
};

template <class S>
Cx<S> operator+(Cx<S> a, const Cx<S>& b) {
  return a += b;
}
template <class S>
Cx<S> operator-(Cx<S> a, const Cx<S>& b) {
  return a -= b;
}
template <class S>
Cx<S> operator-(const Cx<S>& a) {
  return Cx<S>(-a.re, -a.im);
}
template <class S>
Cx<S> operator*(const Cx<S>& a, const Cx<S>& b) {
  return Cx<S>(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
template <class S>
Cx<S> operator*(const Cx<S>& a, double s) {
  return Cx<S>(a.re * s, a.im * s);
}
template <class S>
Cx<S> operator*(double s, const Cx<S>& a) {
  return a * s;
}
template <class S>
Cx<S> scale(const Cx<S>& a, const S& s) {
  return Cx<S>(a.re * s, a.im * s);
}
template <class S>
Cx<S> conj(const Cx<S>& a) {
  return Cx<S>(a.re, -a.im);
}
template <class S>
S norm2(const Cx<S>& a) {
  return a.re * a.re + a.im * a.im;
}
template <class S>
Cx<S> operator/(const Cx<S>& a, const Cx<S>& b) {
  const S inv = 1.0 / norm2(b);
  const Cx<S> n = a * conj(b);
  return Cx<S>(n.re * inv, n.im * inv);
}

}  // namespace polarmap
