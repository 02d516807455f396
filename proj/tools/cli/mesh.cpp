#include "mesh.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/parallel.hpp"

namespace polarmap::cli {

namespace {

struct Vertex {
  Vec3 p;
  Vec x;
  Vec n;
  double k1 = 0.0;
  double S = 0.0;
  double det = 0.0;
};

constexpr double pole_radius = 1e-3;

// Stereographic projection of S^4 from (0,0,0,0,-1); the normal is pushed
// forward and renormalized (the projection is conformal).
bool project(Vertex& v) {
  Vec pole = Vec::Zero(5);
  pole[4] = -1.0;
  if ((v.x - pole).norm() < pole_radius) return false;
  const double d = 1.0 + v.x[4];
  Vec y = v.x.head(4) / d;
  Vec m = v.n.head(4) / d - v.x.head(4) * (v.n[4] / (d * d));
  const double mn = m.norm();
  if (!(mn > 0.0)) return false;
  v.x = y;
  v.n = m / mn;
  return true;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

MeshStats write_mesh(const PresetInstance& inst, const RunConfig& cfg, std::ostream& out) {
  if (cfg.stereo && !(inst.hypersurface->space().has_quadric() && inst.hypersurface->space().signature_index() == 0))
    throw ConfigError("--stereo needs a hypersurface in S^4");

  const int nz = cfg.n_z;
  const int nt = cfg.n_t;
  const Vec3 lo(inst.box.lo.x(), inst.box.lo.y(), inst.scan_t_lo);
  const Vec3 hi(inst.box.hi.x(), inst.box.hi.y(), inst.scan_t_hi);
  const Vec3 w = hi - lo;
  const double dt = w.z() / nt;
  const Hypersurface3 h = inst.hypersurface->with_box(ParamBox{lo, hi});
  const bool polar = inst.polar.has_value();

  // Singular fiber parameters over each base cell centre.
  std::vector<std::vector<double>> roots(static_cast<std::size_t>(nz) * nz);
  if (polar) {
    parallel_for(roots.size(), [&](std::size_t c) {
      const int i = static_cast<int>(c) % nz;
      const int j = static_cast<int>(c) / nz;
      const Vec2 z(lo.x() + (i + 0.5) * w.x() / nz, lo.y() + (j + 0.5) * w.y() / nz);
      try {
        roots[c] = singular_parameters(*inst.polar, z, lo.z(), hi.z());
      } catch (const GeometryError&) {
      }
    });
  }

  const std::size_t n = static_cast<std::size_t>(nz) * nz * nt;
  std::vector<std::optional<Vertex>> verts(n);
  parallel_for(n, [&](std::size_t idx) {
    const int i = static_cast<int>(idx % nz);
    const int j = static_cast<int>((idx / nz) % nz);
    const int k = static_cast<int>(idx / (static_cast<std::size_t>(nz) * nz));
    const Vec3 p(lo.x() + (i + 0.5) * w.x() / nz, lo.y() + (j + 0.5) * w.y() / nz, lo.z() + (k + 0.5) * dt);
    for (double r : roots[static_cast<std::size_t>(j) * nz + i])
      if (std::abs(r - p.z()) <= 0.5 * dt) return;
    try {
      Vertex v;
      v.p = p;
      if (polar) {
        v.det = inst.polar->operator_sample(Vec2(p.x(), p.y()), p.z()).det;
        if (std::abs(v.det) <= inst.polar->tolerances().singular_det) return;
      }
      const auto s = sample(h, p);
      v.x = s.position;
      v.n = s.xi;
      v.k1 = s.k[0];
      v.S = s.S;
      if (cfg.stereo && !project(v)) return;
      verts[idx] = std::move(v);
    } catch (const GeometryError&) {
    }
  });

  MeshStats stats;
  stats.grid = static_cast<int>(n);
  for (const auto& v : verts) (v ? stats.written : stats.masked) += 1;
  const int dim = cfg.stereo ? 4 : static_cast<int>(h.space().dimension());

  out << "ply\nformat ascii 1.0\n";
  out << "comment polarmap " << inst.name << (cfg.stereo ? " stereographic" : "") << '\n';
  out << "comment grid " << nz << ' ' << nz << ' ' << nt << " masked " << stats.masked << '\n';
  out << "element vertex " << stats.written << '\n';
  for (const char* c : {"u", "v", "t"}) out << "property double " << c << '\n';
  for (int c = 0; c < dim; ++c) out << "property double x" << c << '\n';
  for (int c = 0; c < dim; ++c) out << "property double n" << c << '\n';
  out << "property double k1\nproperty double S\n";
  if (polar) out << "property double det\n";
  out << "end_header\n";
  for (const auto& v : verts) {
    if (!v) continue;
    std::string line = fmt(v->p.x()) + ' ' + fmt(v->p.y()) + ' ' + fmt(v->p.z());
    for (int c = 0; c < dim; ++c) line += ' ' + fmt(v->x[c]);
    for (int c = 0; c < dim; ++c) line += ' ' + fmt(v->n[c]);
    line += ' ' + fmt(v->k1) + ' ' + fmt(v->S);
    if (polar) line += ' ' + fmt(v->det);
    out << line << '\n';
  }
  if (!out) throw IoError("failed writing mesh");
  return stats;
}

}  // namespace polarmap::cli
