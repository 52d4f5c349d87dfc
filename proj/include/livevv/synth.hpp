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

#include <vector>

#include "livevv/frame.hpp"
#include "livevv/scene_script.hpp"

namespace livevv::capture {

/// Rest-pose joint positions for the synthetic standing body (z-up, meters,
/// pelvis near z = 0.95).
const Skeleton& rest_pose_skeleton();

/// Everything the generator knows about one instant, including the ground
/// truth that only test oracles may look at.
struct SynthFrame {
  int64_t timestamp_us = 0;
  geom::PointCloud world_cloud;            // static points first, then body
  size_t body_offset = 0;                  // index of first body point
  std::vector<seg::BodyPart> body_labels;  // one per body point
  Skeleton world_skeleton;                 // confidence from the script
  std::vector<TaggedFrame> camera_frames;  // camera-local, one per camera
};

/// Deterministic trace-free capture source. Point shells and primitives are
/// sampled once from the script seed; each frame is a rigid-motion replay of
/// those samples, so static content is bit-identical between frames. World
/// coordinates are quantized to float32 at emission, matching the precision
/// everything downstream stores and ships.
class SceneSynthesizer {
 public:
  explicit SceneSynthesizer(SceneScript script);

  /// Frame for every camera at the given time. sequence_number is stamped
  /// into each descriptor.
  SynthFrame frame_at(int64_t timestamp_us, int64_t sequence_number) const;

  const SceneScript& script() const { return script_; }
  int camera_count() const { return int(script_.cameras.size()); }

  /// Ground-truth camera-to-world pose (oracle use).
  const geom::RigidTransform& camera_pose(size_t camera_index) const {
    return camera_poses_[camera_index];
  }

  /// Ground-truth transform mapping camera `from`'s local frame into camera
  /// `to`'s local frame (oracle use).
  geom::RigidTransform true_pair_transform(size_t from, size_t to) const {
    return camera_poses_[to].inverse().compose(camera_poses_[from]);
  }

 private:
  struct RestPoints {
    std::vector<geom::Point> points;
    std::vector<seg::BodyPart> labels;  // body shells only
  };

  SceneScript script_;
  std::vector<geom::RigidTransform> camera_poses_;
  std::vector<RestPoints> primitive_rest_;  // one per primitive (+ background)
  RestPoints body_rest_;
  geom::PointCloud background_;  // from PLY, already world-frame
};

}  // namespace livevv::capture
