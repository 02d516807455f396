#pragma once

// Central-difference stencils shared by the finite-difference oracles. The
// result is materialized as the callable's return type so that Eigen
// expression templates never outlive their temporaries.

#include <type_traits>

namespace polarmap::fd {

template <class F>
using result_t = std::decay_t<std::invoke_result_t<F&, double>>;

/// 4th-order first derivative: f(s) evaluated at offsets s = k h, k = -2..2.
template <class F>
result_t<F> d1_5pt(F&& f, double h) {
  return result_t<F>((f(-2.0 * h) - 8.0 * f(-h) + 8.0 * f(h) - f(2.0 * h)) / (12.0 * h));
}

/// 2nd-order first derivative.
template <class F>
result_t<F> d1_3pt(F&& f, double h) {
  return result_t<F>((f(h) - f(-h)) / (2.0 * h));
}

/// 4th-order second derivative.
template <class F>
result_t<F> d2_5pt(F&& f, double h) {
  return result_t<F>((-f(-2.0 * h) + 16.0 * f(-h) - 30.0 * f(0.0) + 16.0 * f(h) - f(2.0 * h)) / (12.0 * h * h));
}

/// Central first derivative with one Richardson extrapolation level.
template <class F>
result_t<F> d1_richardson(F&& f, double h) {
  const result_t<F> coarse = (f(h) - f(-h)) / (2.0 * h);
  const result_t<F> fine = (f(0.5 * h) - f(-0.5 * h)) / h;
  return result_t<F>((4.0 * fine - coarse) / 3.0);
}

}  // namespace polarmap::fd
