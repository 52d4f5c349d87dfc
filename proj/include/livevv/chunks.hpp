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

#include <span>
#include <vector>

#include "livevv/disparity.hpp"
#include "livevv/segmentation.hpp"

namespace livevv::vabr {

/// Quality-layer layout shared by chunk construction and the scheduler.
/// Level payloads are nested: each level's point set is a prefix of the
/// next one, so upgrading from L to L+1 ships only the delta slice.
struct ChunkConfig {
  int level_count = 4;  // quality levels 0..Q_cMAX with Q_cMAX = 3
  // Fraction of each non-vital body part present at each level. The head
  // group is vital and rides at full density from the lowest layer up.
  std::vector<double> dynamic_fractions = {0.25, 0.50, 0.75, 1.0};
  // Fraction of each cube update's scheduled points present at each level.
  std::vector<double> static_fractions = {0.25, 0.50, 0.75, 1.0};
  int frames_per_chunk = 24;
  double chunk_duration_s = 1.0;

  void validate() const;
  int max_level() const { return level_count - 1; }
};

/// Points in a fixed deterministic order with per-level prefix lengths.
struct LayeredPoints {
  std::vector<geom::Point> points;
  std::vector<uint32_t> level_counts;  // non-decreasing, last == points.size()

  std::span<const geom::Point> at_level(int level) const {
    return {points.data(), level_counts[size_t(level)]};
  }
  std::span<const geom::Point> delta(int from_level, int to_level) const {
    const uint32_t a = from_level < 0 ? 0 : level_counts[size_t(from_level)];
    const uint32_t b = level_counts[size_t(to_level)];
    return {points.data() + a, b - a};
  }
};

struct DynamicChunkFrame {
  int64_t slot = 0;
  std::array<LayeredPoints, seg::kPartCount> parts;
};

/// One second (frames_per_chunk frames) of layered body payload.
struct DynamicChunk {
  int64_t chunk_index = 0;
  std::vector<DynamicChunkFrame> frames;
  std::vector<int64_t> level_wire_bits;  // complete message size at each level

  int64_t points_at_level(int level) const;
};

/// Builds the layered dynamic chunk from per-frame decimated parts.
/// `frames` pairs each slot index with its 15 part clouds (profile already
/// applied). Point order within a part is a deterministic permutation keyed
/// by (seed, chunk, slot, part).
DynamicChunk build_dynamic_chunk(
    int64_t chunk_index,
    const std::vector<std::pair<int64_t, std::array<geom::PointCloud, seg::kPartCount>>>& frames,
    const ChunkConfig& cfg, uint64_t seed);

/// One cube update with its layer slices. demand_fraction is the share of
/// the cube's points this update ships at top level: the normalized Chamfer
/// distance weighted by the detection frequency (capped at 1), or exactly 1
/// for brand-new cells, Clear actions and lossless mode.
struct StaticChunkEntry {
  reuse::CubeUpdate update;  // carries index/action/saliency; points in layer order
  double demand_fraction = 1.0;
  LayeredPoints layered;

  int64_t wire_bits_at_level(int level) const;
};

/// Cube updates for one chunk period, saliency-ordered (descending) so
/// greedy budget filling walks entries front to back.
struct StaticChunk {
  int64_t chunk_index = 0;
  std::vector<StaticChunkEntry> entries;
  std::vector<int64_t> level_wire_bits;
};

StaticChunk build_static_chunk(int64_t chunk_index,
                               const std::vector<reuse::CubeUpdate>& candidates,
                               const ChunkConfig& cfg, bool lossless, uint64_t seed);

/// Exact wire-format sizes (bits, including the 10-byte frame header) —
/// kept in lockstep with the codec and pinned by round-trip tests.
int64_t dynamic_chunk_wire_bits(const DynamicChunk& chunk, int level);
int64_t layer_upgrade_wire_bits(const DynamicChunk& chunk, int from_level, int to_level);
int64_t static_chunk_wire_bits(const StaticChunk& chunk, int level);
inline constexpr int64_t kMessageHeaderBytes = 10;
inline constexpr int64_t kStaticMessageOverheadBytes = kMessageHeaderBytes + 4 + 1 + 4;
inline constexpr int64_t kStaticEntryOverheadBytes = 12 + 1 + 4 + 4;

}  // namespace livevv::vabr
