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
#include <optional>
#include <vector>

#include "livevv/geometry.hpp"
#include "livevv/skeleton.hpp"

namespace livevv::capture {

/// Identifies one captured frame on the shared capture clock.
struct FrameDescriptor {
  int camera_id = 0;
  int64_t capture_timestamp_us = 0;  // shared notional clock
  int64_t sequence_number = 0;       // strictly increasing per camera
  int64_t point_count = 0;
};

/// One camera's frame: camera-local cloud plus optional tracked skeleton.
struct TaggedFrame {
  FrameDescriptor descriptor;
  geom::PointCloud cloud;            // camera-local coordinates
  std::optional<Skeleton> skeleton;  // camera-local coordinates
};

/// Synchronization parameters. The slot duration is kept as a rational frame
/// rate (frames = rate_num/rate_den per second) so slot assignment is exact
/// integer arithmetic even for 24 fps, where 1/24 s is not a whole number of
/// microseconds.
struct SyncConfig {
  int64_t rate_num = 24;  // frames per rate_den seconds
  int64_t rate_den = 1;
  int camera_count = 1;
  bool reuse_on_loss = true;
  size_t queue_depth = 8;  // per-camera pending frames; overflow drops oldest

  double slot_seconds() const { return double(rate_den) / double(rate_num); }

  /// floor(timestamp / delta_T) without floating point: two frames with equal
  /// timestamps always land in the same slot, boundaries go to the later slot.
  int64_t slot_of(int64_t timestamp_us) const {
    // slot = floor(ts_us * rate_num / (rate_den * 1e6))
    __int128 n = __int128(timestamp_us) * rate_num;
    __int128 d = __int128(rate_den) * 1000000;
    __int128 q = n / d;
    if (n % d != 0 && (n < 0) != (d < 0)) --q;  // floor for negative ts
    return int64_t(q);
  }

  int64_t slot_start_us(int64_t slot) const {
    // ceil(slot * rate_den * 1e6 / rate_num): first integer microsecond in the slot
    __int128 n = __int128(slot) * rate_den * 1000000;
    __int128 q = n / rate_num;
    if (n % rate_num != 0 && n > 0) ++q;
    return int64_t(q);
  }
};

/// One complete multi-view frame group: exactly one frame per camera.
struct SyncedGroup {
  int64_t slot_index = 0;
  std::vector<TaggedFrame> frames;      // indexed by camera order (size N)
  std::vector<bool> reused_flags;       // true where a prior frame filled a gap
};

}  // namespace livevv::capture
