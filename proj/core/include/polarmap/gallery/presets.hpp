#pragma once

// Named examples addressable from the command line.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarmap/gallery/bryant.hpp"
#include "polarmap/hypersurface/hypersurface.hpp"
#include "polarmap/polar/polar_map.hpp"

namespace polarmap {

struct PresetParams {
  std::optional<MeromorphicPair> pair;
  std::map<std::string, double> scalars;
};

struct PresetInstance {
  std::string name;
  std::optional<BranchedSurface> base;     // the surface the construction starts from
  std::optional<PolarMap> polar;
  std::optional<Hypersurface3> hypersurface;
  ParamBox box;                            // where validators sample
  double scan_t_lo = 0.0;                  // fiber range for singular-set scans and meshes
  double scan_t_hi = 1.0;
  /// Threshold on S for the totally geodesic locus at 24 cells per base
  /// direction; it scales with the squared cell size.
  double locus_eps = 1e-3;
  /// Dimensions of the expected totally geodesic components, ascending.
  std::vector<int> expected_locus;
  /// Base surface should have circular curvature ellipses.
  bool superminimal = false;
};

struct Preset {
  std::string name;
  std::string space;        // euclidean | spherical | hyperbolic
  std::string description;
  std::vector<std::string> parameters;
  std::function<PresetInstance(const PresetParams&)> build;
};

const std::vector<Preset>& preset_registry();
/// nullptr when unknown.
const Preset* find_preset(std::string_view name);
/// Presets whose name, space or description contains filter.
std::vector<const Preset*> list_presets(std::string_view filter = {});

}  // namespace polarmap
