#pragma once

// Superminimal surfaces in S^4 from pairs of meromorphic functions, through a
// horizontal holomorphic curve in CP^3 and the twistor projection.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "polarmap/gallery/exact.hpp"
#include "polarmap/surface/branched_surface.hpp"

namespace polarmap {

struct MeromorphicPair {
  RationalFn phi;
  RationalFn psi;

  /// Poles of phi and psi (numerical).
  std::vector<std::complex<double>> poles() const;
};

/// z -> [1 : a : b : c] in the affine chart of CP^3.
class HolomorphicCurve {
 public:
  explicit HolomorphicCurve(std::array<RationalFn, 4> coords) : coords_(std::move(coords)) {}

  const std::array<RationalFn, 4>& coords() const { return coords_; }

  template <class S>
  std::array<Cx<S>, 4> eval(const Cx<S>& z) const {
    return {coords_[0].eval(z), coords_[1].eval(z), coords_[2].eval(z), coords_[3].eval(z)};
  }
  std::array<std::complex<double>, 4> operator()(std::complex<double> z) const;
  std::array<std::complex<double>, 4> derivative(std::complex<double> z) const;

  /// z1 dz2 - z2 dz1 + z3 dz4 - z4 dz3 as an exact rational function; zero
  /// for horizontal curves.
  RationalFn contact_form() const;

  /// Points where the curve is not immersed, with their orders; these are
  /// the branch points of the projected surface.
  std::vector<std::pair<std::complex<double>, int>> critical_points() const;

 private:
  std::array<RationalFn, 4> coords_;
};

/// [1 : phi - psi phi'/(2 psi') : psi : phi'/(2 psi')]. Throws
/// DegenerateSurface when psi is constant.
HolomorphicCurve bryant_curve(const MeromorphicPair& pair);

/// Twistor projection of the curve over `domain`; branch points inside the
/// domain are declared from the critical points of the curve. Throws
/// ConstructionError if a pole lies in the domain.
BranchedSurface superminimal_surface(const MeromorphicPair& pair, const Domain& domain,
                                     std::string name = "superminimal");

}  // namespace polarmap
