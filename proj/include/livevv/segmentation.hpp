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

#include <array>
#include <filesystem>
#include <map>
#include <string>

#include "livevv/body_parts.hpp"
#include "livevv/frame.hpp"

namespace livevv::seg {

/// The merged world-frame cloud split into 15 labeled body parts plus the
/// static remainder. Part clouds and static cloud partition the input.
struct SegmentedFrame {
  int64_t slot_index = 0;
  std::array<geom::PointCloud, kPartCount> body_parts;
  geom::PointCloud static_scene;

  size_t body_point_count() const {
    size_t n = 0;
    for (const auto& c : body_parts) n += c.size();
    return n;
  }
  size_t total_count() const { return body_point_count() + static_scene.size(); }
};

/// Assigns each point to the body part whose padded cylinder contains it;
/// membership ties (overlapping cylinders) go to the nearest axis segment,
/// then to the lower part index. Everything else is static scene.
SegmentedFrame segment(const geom::PointCloud& cloud, const capture::Skeleton& skel,
                       const std::array<CylinderSpec, kPartCount>& specs, int64_t slot_index = 0);

/// Uniform-random decimation keeping round(n * kept_ratio) points. The
/// selection is a pure function of the seed; callers derive the seed from
/// (run seed, slot, part) so replays are identical. Ratio 1 returns the
/// input unchanged.
geom::PointCloud decimate_part(const geom::PointCloud& cloud, double kept_ratio, uint64_t seed);

/// Voxel-grid alternative: keeps the first point in each occupied cell of an
/// axis-aligned grid sized so the output is near the requested ratio.
geom::PointCloud decimate_part_voxel(const geom::PointCloud& cloud, double kept_ratio);

/// Kept-point ratios per report group, with the named presets from the
/// downsample-combination study: base keeps everything; p5 keeps
/// head 50 / chest 25 / arm 15 / leg 25 percent.
struct DecimationProfile {
  std::string name = "base";
  std::array<double, kGroupCount> kept_ratio = {1.0, 1.0, 1.0, 1.0};  // by PartGroup

  double ratio_for(BodyPart part) const { return kept_ratio[size_t(group_of(part))]; }

  static const std::map<std::string, DecimationProfile>& presets();
  static DecimationProfile preset(const std::string& name);  // ConfigError if unknown

  /// Extra presets from a text file: `name,head,chest,arm,leg` with ratios
  /// in percent. Lines starting with '#' are skipped.
  static std::map<std::string, DecimationProfile> load_file(const std::filesystem::path& path);
};

/// Applies the profile to every part of a segmented frame (static scene is
/// untouched). Decimation sub-seeds mix (seed, slot, part).
std::array<geom::PointCloud, kPartCount> decimate_frame(const SegmentedFrame& frame,
                                                        const DecimationProfile& profile,
                                                        uint64_t seed);

inline constexpr int64_t kBytesPerPoint = 15;  // 3 x float32 + 3 x uint8 on the wire

/// Dynamic-chunk bitrate accounting: total post-decimation body points across
/// the chunk's frames, costed at the wire rate of 15 bytes per point.
/// Returns bits.
int64_t dynamic_bitrate_bits(
    const std::vector<std::array<geom::PointCloud, kPartCount>>& frame_parts);

}  // namespace livevv::seg
