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
#include <vector>

#include "livevv/skeleton.hpp"

namespace livevv::seg {

/// The 15 body parts carved out by the cylindrical filters. Enumeration
/// order doubles as the overlap tie-break priority (lower wins).
enum class BodyPart : uint8_t {
  Head = 0,
  Neck,
  Chest,
  Abdomen,
  UpperArmLeft,
  UpperArmRight,
  LowerArmLeft,
  LowerArmRight,
  HandLeft,
  HandRight,
  UpperLegLeft,
  UpperLegRight,
  LowerLegLeft,
  LowerLegRight,
  Pelvis,
};

inline constexpr int kPartCount = 15;

/// Coarse report granularity used by the decimation profiles.
enum class PartGroup : uint8_t { Head = 0, Chest, Arm, Leg };

inline constexpr int kGroupCount = 4;

constexpr std::array<std::string_view, kPartCount> kPartNames = {
    "head",        "neck",          "chest",          "abdomen",
    "upper_arm_l", "upper_arm_r",   "lower_arm_l",    "lower_arm_r",
    "hand_l",      "hand_r",        "upper_leg_l",    "upper_leg_r",
    "lower_leg_l", "lower_leg_r",   "pelvis",
};

constexpr std::array<std::string_view, kGroupCount> kGroupNames = {"head", "chest", "arm", "leg"};

/// head+neck -> head; chest+abdomen+pelvis -> chest; arms+hands -> arm;
/// legs -> leg.
PartGroup group_of(BodyPart part);

/// One cylindrical filter: axis between two skeleton joints, a radius, and
/// axial end padding beyond both joints.
struct CylinderSpec {
  BodyPart part;
  int joint_a;  // axis start
  int joint_b;  // axis end
  double radius;       // meters
  double end_padding;  // meters
};

/// The default 15 filters. Radii are engineering defaults (the filter shape
/// is configurable): head 0.15, torso segments 0.22, neck/arms 0.10,
/// legs 0.12, hands 0.08, padding 0.05.
const std::array<CylinderSpec, kPartCount>& default_cylinders();

}  // namespace livevv::seg
