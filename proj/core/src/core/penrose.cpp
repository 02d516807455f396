#include "polarmap/core/penrose.hpp"

#include "polarmap/core/errors.hpp"

namespace polarmap {

Vec penrose_project(const std::array<std::complex<double>, 4>& p) {
  double n = 0.0;
  for (const auto& c : p) n += std::norm(c);
  require(n > 0.0, ErrorKind::DomainError, "penrose_project: zero homogeneous coordinates");
  std::array<Cx<double>, 4> q;
  for (int i = 0; i < 4; ++i) q[i] = Cx<double>::from(p[i]);
  const auto x = penrose_project(q);
  Vec out(5);
  for (int i = 0; i < 5; ++i) out[i] = x[i];
  return out;
}

std::array<std::complex<double>, 4> twistor_fiber_direction(const std::array<std::complex<double>, 4>& z) {
  return {-std::conj(z[1]), std::conj(z[0]), -std::conj(z[3]), std::conj(z[2])};
}

double horizontality_defect(const std::array<std::complex<double>, 4>& z,
                            const std::array<std::complex<double>, 4>& dz) {
  const auto j = twistor_fiber_direction(z);
  std::complex<double> h = 0.0;
  for (int i = 0; i < 4; ++i) h += dz[i] * std::conj(j[i]);
  return std::abs(h);
}

}  // namespace polarmap
