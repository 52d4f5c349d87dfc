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
#include <optional>
#include <string>
#include <vector>

#include "livevv/body_parts.hpp"
#include "livevv/geometry.hpp"

namespace livevv::capture {

/// Piecewise-linear motion key. Position is the displacement of the object's
/// rest origin; yaw rotates the object about the vertical (z) axis through
/// that origin. Time is clamped outside the keyed range.
struct MotionKey {
  double t_s = 0;
  geom::Vec3 position = geom::Vec3::Zero();
  double yaw_rad = 0;
};

/// Axis-aligned box shell sampled uniformly over its surface. Thin boxes
/// stand in for walls and table tops.
struct PrimitiveSpec {
  geom::Vec3 center = geom::Vec3::Zero();
  geom::Vec3 size = geom::Vec3::Ones();  // full extents
  int point_count = 1000;
  std::array<uint8_t, 3> color = {180, 180, 180};
  std::vector<MotionKey> motion;  // empty = static
};

/// Camera placement. Orientation is derived from look_at/up; the camera's
/// local frame is x-forward, y-left, z-up, so a camera at the origin looking
/// down +x with z up has the identity pose. fov_half_angle_deg = 180 sees
/// everything (useful for oracle tests).
struct CameraSpec {
  int id = 0;
  geom::Vec3 position = geom::Vec3::Zero();
  geom::Vec3 look_at = geom::Vec3::UnitX();
  geom::Vec3 up = geom::Vec3::UnitZ();
  double fov_half_angle_deg = 180;
  double min_range = 0.01;
  double max_range = 100;

  /// Camera-to-world transform.
  geom::RigidTransform pose() const;
};

struct BodySpec {
  bool present = true;
  std::array<int, seg::kPartCount> part_points{};  // shell points per part
  std::vector<MotionKey> motion;
  double joint_confidence = 1.0;

  static std::array<int, seg::kPartCount> default_part_points();
};

/// Complete description of a synthetic capture session. Everything the
/// generator emits is a deterministic function of (script, t, seed).
struct SceneScript {
  uint64_t seed = 1;
  double duration_s = 10.0;
  std::optional<std::filesystem::path> background_ply;
  std::vector<PrimitiveSpec> primitives;
  BodySpec body;
  std::vector<CameraSpec> cameras;

  static SceneScript from_json_file(const std::filesystem::path& path);
  static SceneScript from_json_text(const std::string& text, const std::string& origin = "<json>");
  std::string to_json_text() const;
};

/// Evaluates piecewise-linear motion at time t.
geom::RigidTransform motion_at(const std::vector<MotionKey>& keys, double t_s);

struct DeskSceneOptions {
  int camera_count = 2;
  uint64_t seed = 1;
  double duration_s = 10.0;
  int static_points = 30000;       // spread over walls/floor/desk
  bool body_present = true;
  bool moving_body = true;         // slow sway along x
  bool moving_prop = false;        // a small box that relocates mid-session
  std::optional<std::array<int, seg::kPartCount>> part_points;
};

/// A ready-made desk-scale scene: floor, two walls, a desk box, one body,
/// cameras on a circle around the subject.
SceneScript make_desk_script(const DeskSceneOptions& opt);

}  // namespace livevv::capture
