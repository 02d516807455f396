#include "app.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "config.hpp"
#include "mesh.hpp"
#include "polarmap/core/errors.hpp"
#include "report.hpp"
#include "validators.hpp"

namespace polarmap::cli {

namespace {

PresetInstance build_instance(const RunConfig& cfg) {
  const Preset* preset = find_preset(cfg.example);
  if (!preset) throw ConfigError("unknown example '" + cfg.example + "' (see 'polarmap list')");
  const auto accepts = [&](const std::string& key) {
    return std::find(preset->parameters.begin(), preset->parameters.end(), key) != preset->parameters.end();
  };
  if (cfg.params.pair && !accepts("phi")) throw ConfigError(cfg.example + " takes no phi/psi parameters");
  for (const auto& [key, value] : cfg.params.scalars)
    if (!accepts(key)) throw ConfigError(cfg.example + " has no parameter '" + key + "'");
  try {
    return preset->build(cfg.params);
  } catch (const GeometryError& e) {
    throw ConfigError(std::string("cannot build ") + cfg.example + ": " + e.what());
  }
}

std::vector<std::string> select_validators(const RunConfig& cfg, const PresetInstance& inst) {
  std::vector<std::string> out;
  if (cfg.validators.empty()) {
    for (const auto& v : validator_names())
      if (applicable(v, inst)) out.push_back(v);
    return out;
  }
  for (const auto& v : cfg.validators) {
    if (!applicable(v, inst)) throw ConfigError("validator '" + v + "' does not apply to " + cfg.example);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + path);
}

int cmd_list(const std::string& filter, std::ostream& out) {
  for (const Preset* p : list_presets(filter)) {
    out << p->name << " [" << p->space << "]";
    if (!p->parameters.empty()) {
      out << " params:";
      for (const auto& k : p->parameters) out << ' ' << k;
    }
    out << "  " << p->description << '\n';
  }
  return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PresetInstance inst = build_instance(cfg);
  Report report;
  report.example = inst.name;
  report.space = std::string(find_preset(cfg.example)->space);
  report.config = cfg;
  for (const auto& v : select_validators(cfg, inst)) report.results.push_back(run_validator(v, inst, cfg));
  const std::string text = dump_json(report.to_json());
  if (cfg.out.empty()) {
    out << text;
  } else {
    write_file(cfg.out, text);
  }
  for (const auto& r : report.results)
    err << (r.passed ? "pass " : "FAIL ") << r.name << '\n';
  return report.passed() ? 0 : 1;
}

int cmd_mesh(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PresetInstance inst = build_instance(cfg);
  if (!inst.hypersurface) throw ConfigError(cfg.example + " has no hypersurface to mesh");
  std::ostringstream buf;
  const MeshStats stats = write_mesh(inst, cfg, buf);
  if (cfg.out.empty()) {
    out << buf.str();
  } else {
    write_file(cfg.out, buf.str());
  }
  err << stats.written << " vertices, " << stats.masked << " masked\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"polarmap: minimal hypersurfaces with vanishing Gauss-Kronecker curvature from polar maps"};
  app.require_subcommand(1);

  std::string filter;
  auto* list = app.add_subcommand("list", "list the example presets");
  list->add_option("filter", filter, "substring of name, space or description");

  RunConfig cfg;
  std::string grid;
  std::string validators;
  bool all = false;
  std::optional<double> tol;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--example,example", cfg.example, "preset name");
    sub->add_option("--params", cfg.params_file, "JSON parameter file");
    sub->add_option("--grid", grid, "grid resolution NZ,NT");
    sub->add_option("--tol", tol, "replace every validator threshold");
    sub->add_option("--out", cfg.out, "output path (stdout by default)");
  };
  auto* validate = app.add_subcommand("validate", "run validators and print a JSON report");
  common(validate);
  validate->add_option("--validators", validators, "comma-separated list or 'all'");
  validate->add_flag("--all", all, "run every applicable validator");
  auto* mesh = app.add_subcommand("mesh", "export the hypersurface as an ascii PLY point cloud");
  common(mesh);
  mesh->add_flag("--stereo", cfg.stereo, "stereographic projection of S^4 to R^4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (list->parsed()) return cmd_list(filter, out);
    if (cfg.example.empty()) throw ConfigError("no example given");
    if (!grid.empty()) std::tie(cfg.n_z, cfg.n_t) = parse_grid(grid);
    cfg.tol = tol;
    if (!validators.empty()) {
      if (all) throw ConfigError("--all and --validators are exclusive");
      cfg.validators = parse_validators(validators);
    }
    if (!cfg.params_file.empty()) cfg.params = load_params(cfg.params_file);
    check(cfg);
    if (validate->parsed()) return cmd_validate(cfg, out, err);
    return cmd_mesh(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace polarmap::cli
