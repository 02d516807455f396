#pragma once

#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/types.hpp"

namespace polarmap::test {

// Hand-rolled generators; every property test seeds its own engine.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec random_vec(std::mt19937_64& rng, int n, double scale = 1.0) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = uniform(rng, -scale, scale);
  return v;
}

inline std::complex<double> random_complex(std::mt19937_64& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

inline Mat3 random_sym3(std::mt19937_64& rng) {
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = uniform(rng, -2, 2);
  return 0.5 * (a + a.transpose());
}

template <class F>
ErrorKind error_kind_of(F&& f) {
  try {
    f();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GeometryError";
  return ErrorKind::ContractViolation;
}

}  // namespace polarmap::test
