// Copyright 2026 The LiveVV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "livevv/cube_grid.hpp"

namespace livevv::reuse {

CubeGrid assign_cubes(const geom::PointCloud& cloud, const CubeGridConfig& config) {
  if (config.side_length <= 0) throw ConfigError("cube side_length must be positive");
  CubeGrid grid;
  grid.config = config;
  grid.cells.reserve(cloud.size() / 8 + 1);
  for (const auto& p : cloud.points) {
    const CellIndex idx = config.cell_of(p.pos());
    CubeCell& cell = grid.cells[idx];
    if (cell.points.points.empty()) cell.index = idx;
    cell.points.points.push_back(p);
  }
  return grid;
}

}  // namespace livevv::reuse
