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

#pragma once

#include <cstdint>
#include <unordered_map>

#include "livevv/geometry.hpp"

namespace livevv::reuse {

struct CellIndex {
  int32_t x = 0, y = 0, z = 0;
  bool operator==(const CellIndex&) const = default;
  bool operator<(const CellIndex& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

struct CellIndexHash {
  size_t operator()(const CellIndex& c) const {
    uint64_t h = uint64_t(uint32_t(c.x));
    h = h * 0x9e3779b97f4a7c15ull + uint64_t(uint32_t(c.y));
    h = h * 0x9e3779b97f4a7c15ull + uint64_t(uint32_t(c.z));
    h ^= h >> 29;
    return size_t(h * 0xbf58476d1ce4e5b9ull);
  }
};

enum class DetectLevel : uint8_t { High = 0, Mid = 1, Low = 2 };

/// Uniform partition geometry. The origin is pinned to the calibrated
/// master camera's world origin by the pipeline.
struct CubeGridConfig {
  double side_length = 0.15;  // meters
  geom::Vec3 origin = geom::Vec3::Zero();

  /// floor((p - origin) / side); boundaries belong to the upper cell.
  CellIndex cell_of(const geom::Vec3& p) const {
    auto idx = [&](double v, double o) { return int32_t(std::floor((v - o) / side_length)); };
    return {idx(p.x(), origin.x()), idx(p.y(), origin.y()), idx(p.z(), origin.z())};
  }

  geom::Vec3 cell_center(const CellIndex& c) const {
    return origin + side_length * geom::Vec3(c.x + 0.5, c.y + 0.5, c.z + 0.5);
  }

  bool compatible(const CubeGridConfig& other) const {
    return side_length == other.side_length && origin == other.origin;
  }
};

/// One cube of the static scene, with the per-session bookkeeping the
/// reuse machinery maintains.
struct CubeCell {
  CellIndex index;
  geom::PointCloud points;
  int64_t last_update_slot = -1;
  int64_t last_detect_slot = -1;
  double saliency = 0;
  DetectLevel detect_level = DetectLevel::Low;

  double density() const { return double(points.size()); }
};

/// Spatial partition of one frame's static scene.
struct CubeGrid {
  CubeGridConfig config;
  std::unordered_map<CellIndex, CubeCell, CellIndexHash> cells;

  size_t total_points() const {
    size_t n = 0;
    for (const auto& [_, cell] : cells) n += cell.points.size();
    return n;
  }
};

/// Buckets every point into its cell; points are conserved.
CubeGrid assign_cubes(const geom::PointCloud& cloud, const CubeGridConfig& config);

}  // namespace livevv::reuse
