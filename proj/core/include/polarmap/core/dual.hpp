#pragma once

// Forward-mode dual numbers with N simultaneous partial derivatives.
//
// Nesting gives higher derivatives: Dual<Dual<double, 2>, 2> carries a value,
// a gradient and a Hessian in two variables, one more level carries third
// derivatives. Closed-form geometry is written once as a template over the
// scalar type and instantiated at the order a computation needs.

#include <array>
#include <cmath>
#include <type_traits>

namespace polarmap {

template <class T, int N>
struct Dual {
  T v{};
  std::array<T, N> d{};

  constexpr Dual() = default;
  constexpr Dual(double c) : v(c) {}  // NOLINT: constants lift implicitly
  template <class U = T, std::enable_if_t<!std::is_same_v<U, double>, int> = 0>
  constexpr explicit Dual(const T& c) : v(c) {}
  constexpr Dual(const T& value, const std::array<T, N>& grad) : v(value), d(grad) {}

  Dual& operator+=(const Dual& o) {
    v += o.v;
    for (int i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    for (int i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    for (int i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
    v *= o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    const T inv = T(1.0) / o.v;
    for (int i = 0; i < N; ++i) d[i] = (d[i] - v * o.d[i] * inv) * inv;
    v *= inv;
    return *this;
  }
  Dual& operator*=(double s) {
    v *= s;
    for (auto& di : d) di *= s;
    return *this;
  }
};

template <class T>
struct is_dual : std::false_type {};
template <class T, int N>
struct is_dual<Dual<T, N>> : std::true_type {};

/// Innermost real value of a (possibly nested) dual number.
inline double value_of(double x) { return x; }
template <class T, int N>
double value_of(const Dual<T, N>& x) {
  return value_of(x.v);
}

template <class T, int N>
Dual<T, N> operator-(const Dual<T, N>& a) {
  Dual<T, N> r;
  r.v = -a.v;
  for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
  return r;
}
template <class T, int N>
Dual<T, N> operator+(Dual<T, N> a, const Dual<T, N>& b) {
  return a += b;
}
template <class T, int N>
Dual<T, N> operator-(Dual<T, N> a, const Dual<T, N>& b) {
  return a -= b;
}
template <class T, int N>
Dual<T, N> operator*(Dual<T, N> a, const Dual<T, N>& b) {
  return a *= b;
}
template <class T, int N>
Dual<T, N> operator/(Dual<T, N> a, const Dual<T, N>& b) {
  return a /= b;
}

template <class T, int N>
Dual<T, N> operator+(Dual<T, N> a, double s) {
  a.v += s;
  return a;
}
template <class T, int N>
Dual<T, N> operator+(double s, Dual<T, N> a) {
  a.v += s;
  return a;
}
template <class T, int N>
Dual<T, N> operator-(Dual<T, N> a, double s) {
  a.v -= s;
  return a;
}
template <class T, int N>
Dual<T, N> operator-(double s, const Dual<T, N>& a) {
  Dual<T, N> r = -a;
  r.v += s;
  return r;
}
template <class T, int N>
Dual<T, N> operator*(Dual<T, N> a, double s) {
  return a *= s;
}
template <class T, int N>
Dual<T, N> operator*(double s, Dual<T, N> a) {
  return a *= s;
}
template <class T, int N>
Dual<T, N> operator/(Dual<T, N> a, double s) {
  return a *= (1.0 / s);
}
template <class T, int N>
Dual<T, N> operator/(double s, const Dual<T, N>& a) {
  return Dual<T, N>(s) / a;
}

namespace detail {
// Applies the chain rule given f(a.v) and f'(a.v).
template <class T, int N>
Dual<T, N> chain(const Dual<T, N>& a, const T& f, const T& df) {
  Dual<T, N> r;
  r.v = f;
  for (int i = 0; i < N; ++i) r.d[i] = df * a.d[i];
  return r;
}
}  // namespace detail

template <class T, int N>
Dual<T, N> sin(const Dual<T, N>& a) {
  using std::cos;
  using std::sin;
  return detail::chain(a, T(sin(a.v)), T(cos(a.v)));
}
template <class T, int N>
Dual<T, N> cos(const Dual<T, N>& a) {
  using std::cos;
  using std::sin;
  return detail::chain(a, T(cos(a.v)), T(-sin(a.v)));
}
template <class T, int N>
Dual<T, N> exp(const Dual<T, N>& a) {
  using std::exp;
  const T e = exp(a.v);
  return detail::chain(a, e, e);
}
template <class T, int N>
Dual<T, N> log(const Dual<T, N>& a) {
  using std::log;
  return detail::chain(a, T(log(a.v)), T(1.0 / a.v));
}
template <class T, int N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
  using std::sqrt;
  const T s = sqrt(a.v);
  return detail::chain(a, s, T(0.5 / s));
}
template <class T, int N>
Dual<T, N> sinh(const Dual<T, N>& a) {
  using std::cosh;
  using std::sinh;
  return detail::chain(a, T(sinh(a.v)), T(cosh(a.v)));
}
template <class T, int N>
Dual<T, N> cosh(const Dual<T, N>& a) {
  using std::cosh;
  using std::sinh;
  return detail::chain(a, T(cosh(a.v)), T(sinh(a.v)));
}

/// A dual number seeded as the independent variable `index` at every level.
template <class D>
D make_variable(double value, int index) {
  if constexpr (std::is_same_v<D, double>) {
    (void)index;
    return value;
  } else {
    using Inner = decltype(D{}.v);
    D r;
    r.v = make_variable<Inner>(value, index);
    r.d[index] = Inner(1.0);
    return r;
  }
}

/// Scalar types used for closed-form jets in two surface parameters.
using D1x2 = Dual<double, 2>;
using D2x2 = Dual<D1x2, 2>;
using D3x2 = Dual<D2x2, 2>;
/// Three hypersurface parameters, second order.
using D1x3 = Dual<double, 3>;
using D2x3 = Dual<D1x3, 3>;

}  // namespace polarmap
