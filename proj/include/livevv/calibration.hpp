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
#include <vector>

#include "livevv/frame.hpp"

namespace livevv::calib {

/// Joints with confidence >= threshold. Always 32 entries.
std::array<bool, capture::kJointCount> denoise_skeleton(const capture::Skeleton& s,
                                                        double threshold);

/// Rigid transform mapping the sub camera's frame onto the master's, from
/// joint correspondences that pass the confidence threshold in both
/// skeletons. Correspondences are weighted by the product of the two
/// confidences; a hard 0/1 mask is the special case of binary confidences.
/// Throws CalibrationDegenerateError when fewer than 3 joints survive or the
/// surviving set is collinear.
geom::RigidTransform calibrate_pair(const capture::Skeleton& sub, const capture::Skeleton& master,
                                    double threshold);

struct CalibrationConfig {
  int refresh_interval_slots = 24;  // ~1 s at 24 fps
  double confidence_threshold = 0.5;
};

/// Per-camera transform table onto the master camera. The master maps to the
/// identity implicitly and is chosen as the lowest camera id by default.
class CalibrationState {
 public:
  CalibrationState() = default;
  CalibrationState(int master_camera_id, CalibrationConfig cfg)
      : master_id_(master_camera_id), cfg_(cfg) {}

  int master_camera_id() const { return master_id_; }
  const CalibrationConfig& config() const { return cfg_; }
  int64_t last_update_slot() const { return last_update_slot_; }

  bool is_calibrated(int camera_id) const {
    return camera_id == master_id_ || transforms_.count(camera_id) > 0;
  }
  const geom::RigidTransform& transform(int camera_id) const;
  void set_transform(int camera_id, const geom::RigidTransform& t) {
    transforms_[camera_id] = t;
  }

  /// Recomputes the N-1 pair transforms when the refresh interval has
  /// elapsed and skeletons are available. A camera whose pair calibration
  /// fails (degenerate joints, missing skeleton) keeps its previous
  /// transform; failures are tallied, not raised. last_update_slot moves
  /// only when an attempt is made.
  void refresh(const capture::SyncedGroup& group);

  /// Per-camera counts of failed refresh attempts.
  const std::map<int, int64_t>& failure_counts() const { return failures_; }
  int64_t refresh_attempts() const { return refresh_attempts_; }

  /// Structured-text round trip: camera id, row-major rotation, translation.
  void save(const std::filesystem::path& path) const;
  static CalibrationState load(const std::filesystem::path& path);

 private:
  int master_id_ = 0;
  CalibrationConfig cfg_;
  std::map<int, geom::RigidTransform> transforms_;
  std::map<int, int64_t> failures_;
  int64_t last_update_slot_ = std::numeric_limits<int64_t>::min();
  int64_t refresh_attempts_ = 0;
};

/// Transforms every sub-camera cloud onto the master and concatenates, master
/// cloud first then subs in ascending camera id. Throws NotCalibratedError
/// if any non-master camera lacks a transform.
geom::PointCloud merge_group(const capture::SyncedGroup& group, const CalibrationState& state);

}  // namespace livevv::calib
