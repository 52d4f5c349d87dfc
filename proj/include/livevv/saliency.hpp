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

#include <deque>
#include <filesystem>
#include <map>
#include <vector>

#include "livevv/cube_grid.hpp"

namespace livevv::reuse {

/// One headset tracking sample.
struct ViewportSample {
  int64_t timestamp_us = 0;
  geom::Vec3 position = geom::Vec3::Zero();
  geom::EulerAngles orientation;  // yaw/pitch/roll, radians
};

/// Line-delimited trace: timestamp_us,px,py,pz,yaw_rad,pitch_rad,roll_rad.
std::vector<ViewportSample> read_viewport_trace(const std::filesystem::path& path);
void write_viewport_trace(const std::filesystem::path& path,
                          const std::vector<ViewportSample>& samples);

/// View direction for a sample: the rotated forward (+x) unit vector.
geom::Vec3 view_vector(const ViewportSample& sample);

/// Whether the cube center falls inside the attention cone: the angle
/// between the view vector and (center - headset) is at most the threshold
/// (default 30 degrees). A center coincident with the headset counts as
/// inside — zero distance means maximal attention, not none.
bool in_frustum(const ViewportSample& sample, const geom::Vec3& cube_center,
                double threshold_deg = 30.0);

/// Visual saliency S_V = density * dwell_frequency / distance; the distance
/// is floored at 1 mm so coincident centers score maximal, not infinite/NaN.
double saliency_score(double density, double frustum_frequency, double distance_m);

/// Detection cadence for a saliency score: every frame at or above 16,
/// every 5th frame in [9, 16), every 10th below 9.
struct DetectCadence {
  double frequency;  // F_d: 1, 0.2 or 0.1
  int interval;      // 1, 5 or 10 slots
  DetectLevel level;
};
DetectCadence detect_cadence(double saliency);
inline int detect_interval(DetectLevel level) {
  return level == DetectLevel::High ? 1 : level == DetectLevel::Mid ? 5 : 10;
}
inline double detect_frequency(DetectLevel level) {
  return level == DetectLevel::High ? 1.0 : level == DetectLevel::Mid ? 0.2 : 0.1;
}

struct SaliencyConfig {
  double window_s = 2.0;        // sliding window of samples
  double threshold_deg = 30.0;  // attention cone half-angle
  double scale = 1.0;           // multiplies S_V before the cadence thresholds
};

/// Sliding-window dwell statistics per cube. Samples are fed in timestamp
/// order; each keeps its per-cell frustum hits so expiry is exact.
struct SaliencySnapshot {
  struct CellStats {
    double frustum_frequency = 0;  // f_g in [0,1]
    double distance_m = 0;         // D_c from the newest sample
    int64_t hits = 0;              // N_g sum inside the window
  };
  std::map<CellIndex, CellStats> cells;
  int64_t sample_count = 0;  // N_sample

  /// S_V for a cube of the given density; cubes without stats score 0.
  double score(const CellIndex& index, double density, double scale = 1.0) const;
};

class SaliencyTracker {
 public:
  explicit SaliencyTracker(SaliencyConfig cfg = {}) : cfg_(cfg) {}

  /// Tests the sample against every occupied cell of the grid and updates
  /// the window. Samples must arrive in timestamp order.
  void accumulate(const ViewportSample& sample, const CubeGrid& grid);

  SaliencySnapshot snapshot() const;
  int64_t sample_count() const { return int64_t(window_.size()); }
  const SaliencyConfig& config() const { return cfg_; }

 private:
  struct SampleRecord {
    int64_t timestamp_us;
    geom::Vec3 position;
    std::vector<CellIndex> hits;
  };

  SaliencyConfig cfg_;
  std::deque<SampleRecord> window_;
  std::map<CellIndex, int64_t> hit_counts_;
  std::map<CellIndex, double> last_distance_;
};

/// Saliency heatmap export: cell index, score, cadence level. CSV with
/// header `ix,iy,iz,saliency,level`.
void write_saliency_heatmap(const std::filesystem::path& path, const CubeGrid& grid,
                            const SaliencySnapshot& snap, double scale = 1.0);

}  // namespace livevv::reuse
