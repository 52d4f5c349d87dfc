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
#include <cstdint>
#include <string_view>

#include "livevv/geometry.hpp"

namespace livevv::capture {

inline constexpr int kJointCount = 32;

/// Joint index semantics, matching the 32-joint body-tracking convention of
/// commodity depth cameras. Indices are stable; all skeleton payloads use
/// this table.
enum Joint : int {
  kPelvis = 0,
  kSpineNavel = 1,
  kSpineChest = 2,
  kNeck = 3,
  kClavicleLeft = 4,
  kShoulderLeft = 5,
  kElbowLeft = 6,
  kWristLeft = 7,
  kHandLeft = 8,
  kHandTipLeft = 9,
  kThumbLeft = 10,
  kClavicleRight = 11,
  kShoulderRight = 12,
  kElbowRight = 13,
  kWristRight = 14,
  kHandRight = 15,
  kHandTipRight = 16,
  kThumbRight = 17,
  kHipLeft = 18,
  kKneeLeft = 19,
  kAnkleLeft = 20,
  kFootLeft = 21,
  kHipRight = 22,
  kKneeRight = 23,
  kAnkleRight = 24,
  kFootRight = 25,
  kHead = 26,
  kNose = 27,
  kEyeLeft = 28,
  kEarLeft = 29,
  kEyeRight = 30,
  kEarRight = 31,
};

constexpr std::array<std::string_view, kJointCount> kJointNames = {
    "pelvis",        "spine_navel",    "spine_chest",  "neck",
    "clavicle_left", "shoulder_left",  "elbow_left",   "wrist_left",
    "hand_left",     "handtip_left",   "thumb_left",   "clavicle_right",
    "shoulder_right","elbow_right",    "wrist_right",  "hand_right",
    "handtip_right", "thumb_right",    "hip_left",     "knee_left",
    "ankle_left",    "foot_left",      "hip_right",    "knee_right",
    "ankle_right",   "foot_right",     "head",         "nose",
    "eye_left",      "ear_left",       "eye_right",    "ear_right",
};

struct JointSample {
  geom::Vec3 position = geom::Vec3::Zero();  // meters
  double confidence = 0;                     // [0, 1]
};

/// Exactly 32 joints; the frame of reference follows the frame that carries
/// the skeleton (camera-local in TaggedFrame, world after calibration).
struct Skeleton {
  std::array<JointSample, kJointCount> joints{};

  /// Sets every confidence to the given value.
  void fill_confidence(double c) {
    for (auto& j : joints) j.confidence = c;
  }
};

/// Applies a rigid transform to every joint position.
inline Skeleton transform_skeleton(const Skeleton& s, const geom::RigidTransform& t) {
  Skeleton out = s;
  for (auto& j : out.joints) j.position = t.apply(j.position);
  return out;
}

}  // namespace livevv::capture
