#pragma once

#include <array>
#include <optional>
#include <string>

#include "polarmap/core/types.hpp"

namespace polarmap {

// R^n with the index-s form <v,w>_s = (-1)^s v1 w1 + sum_{i>=2} vi wi, and
// optionally the quadric <x,x>_s = quadric_constant.
class AmbientSpace {
 public:
  static AmbientSpace euclidean(int dimension);
  static AmbientSpace sphere(int dimension);  // S^{n-1} in R^n
  static AmbientSpace hyperbolic4();          // H^4 in R^5_1, x1 > 0
  static AmbientSpace de_sitter4();           // S^4_1 in R^5_1
  static AmbientSpace minkowski5();

  int dimension() const { return dimension_; }
  int signature_index() const { return s_; }
  bool has_quadric() const { return quadric_.has_value(); }
  double quadric_constant() const { return quadric_.value_or(0.0); }
  bool upper_sheet() const { return upper_sheet_; }
  const std::string& name() const { return name_; }

  /// Curvature c of the space form, when the space is one (R^4, S^4, H^4).
  double curvature() const;

  /// Metric coefficient of coordinate i (-1 for the timelike slot).
  double sign(int i) const { return (i == 0 && s_ == 1) ? -1.0 : 1.0; }

  /// Residual of the quadric equation and the sheet condition.
  double quadric_residual(const Vec& x) const;

 private:
  AmbientSpace(std::string name, int dimension, int s, std::optional<double> quadric, bool upper);

  std::string name_;
  int dimension_ = 4;
  int s_ = 0;
  std::optional<double> quadric_;
  bool upper_sheet_ = false;
};

/// <v,w>_s; throws ContractViolation on a dimension mismatch.
double inner(const Vec& v, const Vec& w, const AmbientSpace& space);
double inner(const Vec& v, const Vec& w, int s);

/// Same form over an arbitrary scalar (used with Dual numbers).
template <class S, std::size_t N>
S inner_s(const std::array<S, N>& v, const std::array<S, N>& w, int s) {
  S r = v[0] * w[0];
  if (s == 1) r = -r;
  for (std::size_t i = 1; i < N; ++i) r += v[i] * w[i];
  return r;
}

/// Flips the timelike component so that <raise(v), w>_s = v . w (Euclidean).
Vec raise(const Vec& v, int s);

}  // namespace polarmap
