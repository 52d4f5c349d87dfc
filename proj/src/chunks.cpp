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

#include "livevv/chunks.hpp"

#include <algorithm>
#include <cmath>

#include "livevv/rng.hpp"

namespace livevv::vabr {

using geom::Point;
using geom::PointCloud;

void ChunkConfig::validate() const {
  if (level_count < 1) throw ConfigError("need at least one quality level");
  for (const auto* fr : {&dynamic_fractions, &static_fractions}) {
    if (int(fr->size()) != level_count)
      throw ConfigError("layer fraction table must have one entry per level");
    double prev = 0;
    for (double f : *fr) {
      if (f < prev || f <= 0 || f > 1) throw ConfigError("layer fractions must ascend within (0,1]");
      prev = f;
    }
    if (fr->back() != 1.0) throw ConfigError("top layer fraction must be 1");
  }
  if (frames_per_chunk < 1 || chunk_duration_s <= 0)
    throw ConfigError("chunk duration must be positive");
}

namespace {

LayeredPoints layer_points(const PointCloud& cloud, const std::vector<double>& fractions,
                           bool vital, double demand_fraction, uint64_t seed) {
  LayeredPoints out;
  const auto perm = permutation(cloud.size(), seed);
  out.points.reserve(cloud.size());
  for (size_t i : perm) out.points.push_back(cloud.points[i]);

  const double top = std::clamp(demand_fraction, 0.0, 1.0);
  size_t top_count = size_t(std::llround(double(cloud.size()) * top));
  if (top_count == 0 && !cloud.empty() && top > 0) top_count = 1;  // never ship an empty Replace
  out.points.resize(top_count);

  out.level_counts.reserve(fractions.size());
  for (double f : fractions) {
    const double level_fraction = vital ? 1.0 : f;
    out.level_counts.push_back(uint32_t(std::llround(double(top_count) * level_fraction)));
  }
  out.level_counts.back() = uint32_t(top_count);
  return out;
}

// Payload byte layout mirrored from the codec: per frame u64 slot + u8 part
// count, per part u8 label + u32 count + 15 bytes per point.
int64_t dynamic_payload_bytes(const DynamicChunk& chunk, int level, bool upgrade) {
  int64_t bytes = upgrade ? 4 + 1 + 1 + 2 : 4 + 1 + 2;
  for (const auto& frame : chunk.frames) {
    bytes += 8 + 1;
    for (const auto& part : frame.parts) {
      bytes += 1 + 4 + seg::kBytesPerPoint * int64_t(part.level_counts[size_t(level)]);
    }
  }
  return bytes;
}

}  // namespace

int64_t DynamicChunk::points_at_level(int level) const {
  int64_t n = 0;
  for (const auto& frame : frames)
    for (const auto& part : frame.parts) n += part.level_counts[size_t(level)];
  return n;
}

DynamicChunk build_dynamic_chunk(
    int64_t chunk_index,
    const std::vector<std::pair<int64_t, std::array<PointCloud, seg::kPartCount>>>& frames,
    const ChunkConfig& cfg, uint64_t seed) {
  cfg.validate();
  DynamicChunk chunk;
  chunk.chunk_index = chunk_index;
  chunk.frames.reserve(frames.size());
  for (const auto& [slot, parts] : frames) {
    DynamicChunkFrame frame;
    frame.slot = slot;
    for (int p = 0; p < seg::kPartCount; ++p) {
      const bool vital = seg::group_of(seg::BodyPart(p)) == seg::PartGroup::Head;
      frame.parts[p] = layer_points(parts[p], cfg.dynamic_fractions, vital, 1.0,
                                    mix_seed(seed ^ uint64_t(chunk_index), uint64_t(slot),
                                             uint64_t(p)));
    }
    chunk.frames.push_back(std::move(frame));
  }
  chunk.level_wire_bits.resize(cfg.level_count);
  for (int level = 0; level < cfg.level_count; ++level) {
    chunk.level_wire_bits[level] = dynamic_chunk_wire_bits(chunk, level);
  }
  return chunk;
}

int64_t StaticChunkEntry::wire_bits_at_level(int level) const {
  return 8 * (kStaticEntryOverheadBytes +
              seg::kBytesPerPoint * int64_t(layered.level_counts[size_t(level)]));
}

StaticChunk build_static_chunk(int64_t chunk_index,
                               const std::vector<reuse::CubeUpdate>& candidates,
                               const ChunkConfig& cfg, bool lossless, uint64_t seed) {
  cfg.validate();
  StaticChunk chunk;
  chunk.chunk_index = chunk_index;
  chunk.entries.reserve(candidates.size());
  for (const auto& update : candidates) {
    StaticChunkEntry entry;
    entry.update = update;
    const bool brand_new = update.chamfer == 0;
    if (lossless || brand_new || update.action == reuse::CubeUpdate::Action::Clear) {
      entry.demand_fraction = 1.0;
    } else {
      entry.demand_fraction =
          std::min(1.0, update.normalized_chamfer * reuse::detect_frequency(update.level));
    }
    entry.layered = layer_points(update.points, cfg.static_fractions, /*vital=*/false,
                                 entry.demand_fraction,
                                 mix_seed(seed ^ uint64_t(chunk_index),
                                          uint64_t(uint32_t(update.index.x)) << 32 |
                                              uint64_t(uint32_t(update.index.y)),
                                          uint64_t(uint32_t(update.index.z))));
    entry.update.quality_fraction = entry.demand_fraction;
    chunk.entries.push_back(std::move(entry));
  }
  // Saliency-ordered, highest first; cell index breaks ties deterministically.
  std::stable_sort(chunk.entries.begin(), chunk.entries.end(), [](const auto& a, const auto& b) {
    if (a.update.saliency != b.update.saliency) return a.update.saliency > b.update.saliency;
    return a.update.index < b.update.index;
  });
  chunk.level_wire_bits.resize(cfg.level_count);
  for (int level = 0; level < cfg.level_count; ++level) {
    chunk.level_wire_bits[level] = static_chunk_wire_bits(chunk, level);
  }
  return chunk;
}

int64_t dynamic_chunk_wire_bits(const DynamicChunk& chunk, int level) {
  return 8 * (kMessageHeaderBytes + dynamic_payload_bytes(chunk, level, /*upgrade=*/false));
}

int64_t layer_upgrade_wire_bits(const DynamicChunk& chunk, int from_level, int to_level) {
  int64_t bytes = kMessageHeaderBytes + 4 + 1 + 1 + 2;
  for (const auto& frame : chunk.frames) {
    bytes += 8 + 1;
    for (const auto& part : frame.parts) {
      const int64_t delta = int64_t(part.level_counts[size_t(to_level)]) -
                            int64_t(part.level_counts[size_t(from_level)]);
      bytes += 1 + 4 + seg::kBytesPerPoint * delta;
    }
  }
  return 8 * bytes;
}

int64_t static_chunk_wire_bits(const StaticChunk& chunk, int level) {
  int64_t bits = 8 * (kStaticMessageOverheadBytes);
  for (const auto& entry : chunk.entries) bits += entry.wire_bits_at_level(level);
  return bits;
}

}  // namespace livevv::vabr
