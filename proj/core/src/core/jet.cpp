#include "polarmap/core/jet.hpp"

namespace polarmap {

D1x2 lift1(double v, double dx, double dy) { return D1x2(v, {dx, dy}); }

std::vector<D1x2> lift1(const VJet<2>& j) {
  std::vector<D1x2> out(j.v.size());
  for (int c = 0; c < j.v.size(); ++c) out[c] = lift1(j.v[c], j.d[0][c], j.d[1][c]);
  return out;
}

std::vector<D2x2> lift2(const Jet2Point& j) {
  std::vector<D2x2> out(j.value.size());
  for (int c = 0; c < j.value.size(); ++c) {
    D2x2& r = out[c];
    r.v = lift1(j.value[c], j.d1[0][c], j.d1[1][c]);
    r.d[0] = lift1(j.d1[0][c], j.d2[0][c], j.d2[1][c]);
    r.d[1] = lift1(j.d1[1][c], j.d2[1][c], j.d2[2][c]);
  }
  return out;
}

std::vector<D3x2> lift3(const Jet3Point& j) {
  std::vector<D3x2> out(j.value.size());
  for (int c = 0; c < j.value.size(); ++c) {
    D3x2& r = out[c];
    r.v.v = lift1(j.value[c], j.d1[0][c], j.d1[1][c]);
    r.v.d[0] = lift1(j.d1[0][c], j.d2[0][c], j.d2[1][c]);
    r.v.d[1] = lift1(j.d1[1][c], j.d2[1][c], j.d2[2][c]);
    for (int i = 0; i < 2; ++i) {
      D2x2& di = r.d[i];
      di.v = lift1(j.d1[i][c], j.d2[i][c], j.d2[i + 1][c]);
      di.d[0] = lift1(j.d2[i][c], j.d3[i][c], j.d3[i + 1][c]);
      di.d[1] = lift1(j.d2[i + 1][c], j.d3[i + 1][c], j.d3[i + 2][c]);
    }
  }
  return out;
}

Jet2Point jet2_from_values(const std::function<Vec(const Vec2&)>& f, const Vec2& z, double h1, double h2) {
  const Vec2 ex(1.0, 0.0);
  const Vec2 ey(0.0, 1.0);
  const std::array<Vec2, 2> e{ex, ey};
  auto first = [&](int i, double h) { return Vec((f(z + h * e[i]) - f(z - h * e[i])) / (2.0 * h)); };
  auto second = [&](int i, int j, double h) {
    if (i == j) return Vec((f(z + h * e[i]) - 2.0 * f(z) + f(z - h * e[i])) / (h * h));
    return Vec((f(z + h * (e[i] + e[j])) - f(z + h * (e[i] - e[j])) - f(z - h * (e[i] - e[j])) +
                f(z - h * (e[i] + e[j]))) /
               (4.0 * h * h));
  };
  Jet2Point j;
  j.value = f(z);
  for (int i = 0; i < 2; ++i) j.d1[i] = (4.0 * first(i, h1 / 2) - first(i, h1)) / 3.0;
  const std::array<std::pair<int, int>, 3> pairs{{{0, 0}, {0, 1}, {1, 1}}};
  for (int k = 0; k < 3; ++k) {
    const auto [a, b] = pairs[k];
    j.d2[k] = (4.0 * second(a, b, h2 / 2) - second(a, b, h2)) / 3.0;
  }
  return j;
}

}  // namespace polarmap
