#include "validators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>

#include "polarmap/core/errors.hpp"
#include "polarmap/core/parallel.hpp"
#include "polarmap/hypersurface/nullity.hpp"
#include "polarmap/hypersurface/structure.hpp"
#include "polarmap/surface/analysis.hpp"

namespace polarmap::cli {

Metric summarize(std::string name, std::vector<double> values, double threshold) {
  Metric m;
  m.name = std::move(name);
  m.threshold = threshold;
  if (!values.empty()) {
    std::sort(values.begin(), values.end());
    m.max = values.back();
    const std::size_t n = values.size();
    m.median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
  }
  m.passed = m.max < threshold;  // NaN fails too
  return m;
}

namespace {

double threshold(const RunConfig& cfg, double fallback) { return cfg.tol ? *cfg.tol : fallback; }

// Cell-centred grid over the box, x fastest.
std::vector<Vec3> grid(const ParamBox& box, int nx, int ny, int nt) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(nx) * ny * nt);
  const Vec3 w = box.width();
  for (int k = 0; k < nt; ++k)
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i)
        out.emplace_back(box.lo.x() + (i + 0.5) * w.x() / nx, box.lo.y() + (j + 0.5) * w.y() / ny,
                         box.lo.z() + (k + 0.5) * w.z() / nt);
  return out;
}

// Evaluates fn at every point in parallel; nullopt marks a skipped point.
template <class T, class F>
std::vector<std::optional<T>> evaluate(const std::vector<Vec3>& pts, F fn) {
  std::vector<std::optional<T>> out(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    try {
      out[i] = fn(pts[i]);
    } catch (const GeometryError&) {
      out[i] = std::nullopt;
    }
  });
  return out;
}

template <class T>
void count(ValidatorResult& r, const std::vector<std::optional<T>>& v) {
  for (const auto& x : v) (x ? r.samples : r.skipped) += 1;
}

bool regular_polar_point(const PresetInstance& inst, const Vec3& p) {
  if (!inst.polar) return true;
  return std::abs(inst.polar->operator_sample(Vec2(p.x(), p.y()), p.z()).det) > inst.polar->tolerances().singular_det;
}

void finish(ValidatorResult& r) {
  for (const auto& m : r.metrics) r.passed = r.passed && m.passed;
}

ValidatorResult surface_check(const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  r.checks = "base surface is conformal, minimal in its target and lies on its quadric";
  const BranchedSurface& g = *inst.base;
  const auto pts = grid(inst.box, cfg.n_z, cfg.n_z, 1);
  struct Row {
    double conformal, minimal, quadric, frame, ellipse;
  };
  const auto rows = evaluate<Row>(pts, [&](const Vec3& p) {
    const Vec2 z(p.x(), p.y());
    const auto cf = conformal_factor(g, z);
    Row row{};
    row.conformal = cf.residual / cf.E;
    row.minimal = minimality_residual(g, z);
    row.quadric = g.ambient().has_quadric() ? quadric_residual(g, z) : 0.0;
    row.frame = frame_gram_residual(g, z);
    row.ellipse = inst.superminimal ? ellipse_circularity(g, z) : 0.0;
    return row;
  });
  count(r, rows);
  std::vector<double> c, m, q, f, e;
  for (const auto& row : rows) {
    if (!row) continue;
    c.push_back(row->conformal);
    m.push_back(row->minimal);
    q.push_back(row->quadric);
    f.push_back(row->frame);
    e.push_back(row->ellipse);
  }
  r.metrics.push_back(summarize("conformality", c, threshold(cfg, 1e-8)));
  r.metrics.push_back(summarize("minimality", m, threshold(cfg, 1e-6)));
  if (g.ambient().has_quadric()) r.metrics.push_back(summarize("quadric", q, threshold(cfg, 1e-10)));
  r.metrics.push_back(summarize("normal_frame", f, threshold(cfg, 1e-8)));
  if (inst.superminimal) r.metrics.push_back(summarize("ellipse_circularity", e, threshold(cfg, 1e-6)));
  nlohmann::ordered_json bps = nlohmann::ordered_json::array();
  for (const auto& bp : g.branch_points()) bps.push_back({{"z", {bp.z.x(), bp.z.y()}}, {"order", bp.order}});
  r.findings["branch_points"] = bps;
  return r;
}

ValidatorResult curvature_check(const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  r.checks = "minimal with vanishing Gauss-Kronecker curvature: principal curvatures (k, 0, -k)";
  const auto pts = grid(inst.box, cfg.n_z, cfg.n_z, cfg.n_t);
  const auto rows = evaluate<std::array<double, 4>>(pts, [&](const Vec3& p) {
    if (!regular_polar_point(inst, p)) fail(ErrorKind::SingularPoint, "singular");
    const auto s = sample(*inst.hypersurface, p);
    return std::array<double, 4>{std::abs(s.H), std::abs(s.k[1]), std::abs(s.k[0] + s.k[2]), std::abs(s.K)};
  });
  count(r, rows);
  std::array<std::vector<double>, 4> v;
  for (const auto& row : rows)
    if (row)
      for (int i = 0; i < 4; ++i) v[i].push_back((*row)[i]);
  r.metrics.push_back(summarize("H", v[0], threshold(cfg, 1e-5)));
  r.metrics.push_back(summarize("k2", v[1], threshold(cfg, 1e-6)));
  r.metrics.push_back(summarize("k1+k3", v[2], threshold(cfg, 1e-5)));
  r.metrics.push_back(summarize("K", v[3], threshold(cfg, 1e-12)));
  return r;
}

ValidatorResult metric_check(const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  r.checks = "induced metric from the closed formula agrees with the Gram matrix of the differential";
  const auto pts = grid(inst.box, cfg.n_z, cfg.n_z, cfg.n_t);
  const auto rows = evaluate<double>(pts, [&](const Vec3& p) {
    return induced_metric(*inst.polar, Vec2(p.x(), p.y()), p.z()).relative_error;
  });
  count(r, rows);
  std::vector<double> v;
  for (const auto& row : rows)
    if (row) v.push_back(*row);
  r.metrics.push_back(summarize("relative_error", v, threshold(cfg, 1e-6)));
  return r;
}

double quadric_defect(const Vec& x, const AmbientSpace& space) {
  double d = std::abs(inner(x, x, space) - space.quadric_constant());
  if (space.upper_sheet() && x[0] <= 0.0) d = std::numeric_limits<double>::infinity();
  return d;
}

ValidatorResult quadric_check(const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  r.checks = "hypersurface and base surface satisfy their quadric equations (and the upper sheet in H^4)";
  const AmbientSpace& space = inst.hypersurface->space();
  const auto pts = grid(inst.box, cfg.n_z, cfg.n_z, cfg.n_t);
  const auto rows = evaluate<std::array<double, 2>>(pts, [&](const Vec3& p) {
    std::array<double, 2> row{0.0, 0.0};
    if (space.has_quadric()) row[0] = quadric_defect(inst.hypersurface->position(p), space);
    if (inst.base && inst.base->ambient().has_quadric())
      row[1] = quadric_defect(inst.base->value(Vec2(p.x(), p.y())), inst.base->ambient());
    return row;
  });
  count(r, rows);
  std::vector<double> a, b;
  for (const auto& row : rows) {
    if (!row) continue;
    a.push_back((*row)[0]);
    b.push_back((*row)[1]);
  }
  if (space.has_quadric()) r.metrics.push_back(summarize("hypersurface", a, threshold(cfg, 1e-10)));
  if (inst.base && inst.base->ambient().has_quadric())
    r.metrics.push_back(summarize("base", b, threshold(cfg, 1e-10)));
  return r;
}

ValidatorResult regularity_check(const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  r.checks = "singular fibers found exactly, and the polar map extends regularly over branch points";
  const PolarMap& map = *inst.polar;
  const auto pts = grid(ParamBox{Vec3(inst.box.lo.x(), inst.box.lo.y(), 0), Vec3(inst.box.hi.x(), inst.box.hi.y(), 1)},
                        cfg.n_z, cfg.n_z, 1);
  const auto rows = evaluate<std::vector<std::pair<double, double>>>(pts, [&](const Vec3& p) {
    const Vec2 z(p.x(), p.y());
    std::vector<std::pair<double, double>> roots;
    for (double t : singular_parameters(map, z, inst.scan_t_lo, inst.scan_t_hi))
      roots.emplace_back(t, std::abs(map.operator_sample(z, t).det));
    return roots;
  });
  count(r, rows);
  std::vector<double> dets;
  std::set<double> ts;
  int singular_fibers = 0;
  for (const auto& row : rows) {
    if (!row) continue;
    if (!row->empty()) ++singular_fibers;
    for (const auto& [t, d] : *row) {
      dets.push_back(d);
      ts.insert(std::round(t * 1e9) / 1e9);
    }
  }
  r.metrics.push_back(summarize("det_at_roots", dets, threshold(cfg, map.tolerances().singular_det)));
  nlohmann::ordered_json tlist = nlohmann::ordered_json::array();
  for (double t : ts) {
    if (tlist.size() >= 32) break;
    tlist.push_back(t);
  }
  r.findings["singular_t"] = tlist;
  r.findings["singular_fibers"] = singular_fibers;

  std::vector<double> spreads, limits;
  nlohmann::ordered_json branch = nlohmann::ordered_json::array();
  const double t_mid = 0.5 * (inst.scan_t_lo + inst.scan_t_hi);
  for (const auto& bp : map.base().branch_points()) {
    const Vec3 p(bp.z.x(), bp.z.y(), inst.box.lo.z());
    if (!inst.box.contains(p)) continue;
    for (double t : {inst.scan_t_lo, t_mid, inst.scan_t_hi}) {
      try {
        const auto res = branch_limit(map, bp, t);
        spreads.push_back(res.spread);
        limits.push_back(res.limit);
        branch.push_back({{"z", {bp.z.x(), bp.z.y()}},
                          {"order", bp.order},
                          {"t", t},
                          {"verdict", std::string(to_string(res.verdict))},
                          {"limit", res.limit},
                          {"spread", res.spread}});
      } catch (const GeometryError& e) {
        ++r.skipped;
        branch.push_back({{"z", {bp.z.x(), bp.z.y()}}, {"t", t}, {"error", e.what()}});
      }
    }
  }
  r.findings["branch_points"] = branch;
  if (!branch.empty()) {
    r.metrics.push_back(summarize("branch_spread", spreads, threshold(cfg, map.tolerances().branch_spread)));
    // A regular extension has a negative limit.
    r.metrics.push_back(summarize("branch_limit", limits, threshold(cfg, 0.0)));
  }
  return r;
}

ValidatorResult structure_check(const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  r.checks = "structure equations of the principal frame and harmonicity of u, v";
  // Cylinders over minimal surfaces in R^3 have u = v = 0 and are checked tightly.
  const bool cylinder = inst.hypersurface->curvature() == 0.0 && !inst.polar;
  // Interior subgrid; the Laplacian stencil needs room inside the box.
  const Vec3 margin = 0.1 * inst.box.width();
  const auto pts = grid(ParamBox{inst.box.lo + margin, inst.box.hi - margin}, 3, 3, 2);
  const auto rows = evaluate<StructureResiduals>(pts, [&](const Vec3& p) {
    if (!regular_polar_point(inst, p)) fail(ErrorKind::SingularPoint, "singular");
    return structure_residuals(*inst.hypersurface, p);
  });
  count(r, rows);
  std::vector<double> conn, pde, br, lap;
  for (const auto& row : rows) {
    if (!row) continue;
    conn.push_back(row->max_connection());
    pde.push_back(row->max_pde());
    br.push_back(row->max_bracket());
    lap.push_back(std::max(std::abs(row->laplace_u), std::abs(row->laplace_v)));
  }
  r.metrics.push_back(summarize("connection", conn, threshold(cfg, 1e-6)));
  r.metrics.push_back(summarize("pde", pde, threshold(cfg, cylinder ? 1e-8 : 1e-3)));
  r.metrics.push_back(summarize("bracket", br, threshold(cfg, 1e-6)));
  r.metrics.push_back(summarize("laplacian", lap, threshold(cfg, 5e-3)));
  return r;
}

ValidatorResult ruling_check(const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  r.checks = "nullity leaves are ambient geodesics along which the Gauss map is constant";
  const Vec3 margin = 0.25 * inst.box.width();
  const auto pts = grid(ParamBox{inst.box.lo + margin, inst.box.hi - margin}, 3, 3, 2);
  const double length = 0.5 * std::min({margin.x(), margin.y(), margin.z()});
  const auto rows = evaluate<std::array<double, 3>>(pts, [&](const Vec3& p) {
    if (!regular_polar_point(inst, p)) fail(ErrorKind::SingularPoint, "singular");
    const auto s = sample(*inst.hypersurface, p);
    if (s.S <= Tolerances{}.s_min) fail(ErrorKind::ConditioningError, "nullity not defined");
    const auto trace = trace_nullity_geodesic(*inst.hypersurface, p, length, length / 50.0);
    const double len = trace.points.back().s;
    return std::array<double, 3>{xi_variation(trace) / std::max(len, 1e-12),
                                 ruled_representation_residual(*inst.hypersurface, trace),
                                 ambient_geodesic_residual(*inst.hypersurface, p)};
  });
  count(r, rows);
  std::array<std::vector<double>, 3> v;
  for (const auto& row : rows)
    if (row)
      for (int i = 0; i < 3; ++i) v[i].push_back((*row)[i]);
  r.metrics.push_back(summarize("xi_variation_per_length", v[0], threshold(cfg, 1e-6)));
  r.metrics.push_back(summarize("ruled_representation", v[1], threshold(cfg, 1e-6)));
  r.metrics.push_back(summarize("ambient_geodesic", v[2], threshold(cfg, 1e-6)));
  return r;
}

ValidatorResult locus_check(const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  r.checks = "totally geodesic points form the expected components";
  const double cell_scale = 24.0 / cfg.n_z;
  const double eps = cfg.tol ? *cfg.tol : inst.locus_eps * cell_scale * cell_scale;
  const auto scan = geodesic_locus_scan(*inst.hypersurface, {cfg.n_z, cfg.n_z, cfg.n_t}, eps);
  r.samples = scan.evaluated;
  r.skipped = scan.skipped;
  std::vector<double> s_values;
  for (const auto& p : scan.points) s_values.push_back(sample(*inst.hypersurface, p).S);
  r.metrics.push_back(summarize("S_on_locus", s_values, eps));
  std::vector<int> dims;
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& c : scan.components) {
    dims.push_back(c.dimension);
    comps.push_back({{"points", c.points.size()},
                     {"dimension", c.dimension},
                     {"singular_values", {c.singular_values[0], c.singular_values[1], c.singular_values[2]}}});
  }
  std::sort(dims.begin(), dims.end());
  r.findings["eps"] = eps;
  r.findings["components"] = comps;
  r.findings["expected_dimensions"] = inst.expected_locus;
  if (dims != inst.expected_locus) {
    r.passed = false;
    r.findings["mismatch"] = true;
  }
  return r;
}

}  // namespace

bool applicable(const std::string& v, const PresetInstance& inst) {
  if (v == "surface") return inst.base.has_value();
  if (v == "metric" || v == "regularity") return inst.polar.has_value();
  if (v == "quadric")
    return inst.hypersurface->space().has_quadric() || (inst.base && inst.base->ambient().has_quadric());
  return inst.hypersurface.has_value();
}

ValidatorResult run_validator(const std::string& v, const PresetInstance& inst, const RunConfig& cfg) {
  ValidatorResult r;
  if (v == "surface") r = surface_check(inst, cfg);
  else if (v == "curvature") r = curvature_check(inst, cfg);
  else if (v == "metric") r = metric_check(inst, cfg);
  else if (v == "quadric") r = quadric_check(inst, cfg);
  else if (v == "regularity") r = regularity_check(inst, cfg);
  else if (v == "structure") r = structure_check(inst, cfg);
  else if (v == "ruling") r = ruling_check(inst, cfg);
  else if (v == "locus") r = locus_check(inst, cfg);
  else throw ConfigError("unknown validator: " + v);
  r.name = v;
  finish(r);
  return r;
}

}  // namespace polarmap::cli
