#pragma once

#include <ostream>

#include "config.hpp"

namespace polarmap::cli {

struct MeshStats {
  int grid = 0;       // n_z * n_z * n_t
  int written = 0;
  int masked = 0;
};

/// Ascii PLY point cloud over the cell-centred grid of the preset box (t spans
/// the scan range). Each vertex carries its parameters, position, unit normal,
/// k1, S and, for polar maps, the determinant of the polar operator. Vertices
/// are dropped where sampling fails, where the determinant is singular, or
/// where a singular fiber parameter falls inside the cell.
MeshStats write_mesh(const PresetInstance& inst, const RunConfig& cfg, std::ostream& out);

}  // namespace polarmap::cli
