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

#include "livevv/synth.hpp"

#include <cmath>

#include "livevv/ply_io.hpp"
#include "livevv/rng.hpp"

namespace livevv::capture {

using geom::Point;
using geom::RigidTransform;
using geom::Vec3;
using seg::BodyPart;

const Skeleton& rest_pose_skeleton() {
  static const Skeleton rest = [] {
    Skeleton s;
    auto set = [&](int j, double x, double y, double z) { s.joints[j].position = {x, y, z}; };
    set(kPelvis, 0, 0, 0.95);
    set(kSpineNavel, 0, 0, 1.15);
    set(kSpineChest, 0, 0, 1.35);
    set(kNeck, 0, 0, 1.52);
    set(kHead, 0, 0, 1.62);
    set(kNose, 0, 0.08, 1.74);
    set(kEyeLeft, 0.035, 0.08, 1.73);
    set(kEarLeft, 0.08, 0.01, 1.70);
    set(kEyeRight, -0.035, 0.08, 1.73);
    set(kEarRight, -0.08, 0.01, 1.70);
    for (int side = 0; side < 2; ++side) {
      double sx = side == 0 ? 1.0 : -1.0;
      int clav = side == 0 ? kClavicleLeft : kClavicleRight;
      int shoulder = side == 0 ? kShoulderLeft : kShoulderRight;
      int elbow = side == 0 ? kElbowLeft : kElbowRight;
      int wrist = side == 0 ? kWristLeft : kWristRight;
      int hand = side == 0 ? kHandLeft : kHandRight;
      int tip = side == 0 ? kHandTipLeft : kHandTipRight;
      int thumb = side == 0 ? kThumbLeft : kThumbRight;
      int hip = side == 0 ? kHipLeft : kHipRight;
      int knee = side == 0 ? kKneeLeft : kKneeRight;
      int ankle = side == 0 ? kAnkleLeft : kAnkleRight;
      int foot = side == 0 ? kFootLeft : kFootRight;
      set(clav, sx * 0.06, 0, 1.48);
      set(shoulder, sx * 0.24, 0, 1.48);
      set(elbow, sx * 0.30, 0, 1.18);
      set(wrist, sx * 0.33, 0, 0.93);
      set(hand, sx * 0.34, 0.02, 0.88);
      set(tip, sx * 0.35, 0.04, 0.82);
      set(thumb, sx * 0.30, 0.05, 0.89);
      set(hip, sx * 0.10, 0, 0.92);
      set(knee, sx * 0.12, 0, 0.50);
      set(ankle, sx * 0.13, 0, 0.08);
      set(foot, sx * 0.13, 0.12, 0.04);
    }
    s.fill_confidence(1.0);
    return s;
  }();
  return rest;
}

namespace {

// Orthonormal basis perpendicular to the (unit) axis.
void axis_basis(const Vec3& axis, Vec3& n1, Vec3& n2) {
  Vec3 pick = std::abs(axis.z()) < 0.9 ? Vec3::UnitZ() : Vec3::UnitX();
  n1 = axis.cross(pick).normalized();
  n2 = axis.cross(n1);
}

Point quantized(const Vec3& p, uint8_t r, uint8_t g, uint8_t b) {
  Point pt;
  pt.x = geom::float_quantize(p.x());
  pt.y = geom::float_quantize(p.y());
  pt.z = geom::float_quantize(p.z());
  pt.r = r;
  pt.g = g;
  pt.b = b;
  return pt;
}

// Per-part display colors so reconstructions are inspectable by eye.
constexpr std::array<std::array<uint8_t, 3>, seg::kPartCount> kPartColors = {{
    {230, 190, 160}, {220, 180, 150}, {60, 90, 180},  {70, 100, 170},
    {180, 60, 60},   {180, 80, 60},   {200, 90, 70},  {200, 110, 70},
    {230, 160, 120}, {230, 170, 120}, {60, 140, 70},  {60, 150, 80},
    {80, 160, 90},   {80, 170, 100},  {90, 80, 160},
}};

}  // namespace

SceneSynthesizer::SceneSynthesizer(SceneScript script) : script_(std::move(script)) {
  if (script_.cameras.empty()) throw ConfigError("scene script has no cameras");
  for (const auto& cam : script_.cameras) camera_poses_.push_back(cam.pose());

  // Primitive shells: uniform over the box surface, area-weighted.
  for (size_t pi = 0; pi < script_.primitives.size(); ++pi) {
    const PrimitiveSpec& prim = script_.primitives[pi];
    Rng rng(mix_seed(script_.seed, 0x9eull, pi));
    RestPoints rest;
    rest.points.reserve(prim.point_count);
    const Vec3 half = prim.size / 2.0;
    const double ax = prim.size.y() * prim.size.z();  // faces normal to x
    const double ay = prim.size.x() * prim.size.z();
    const double az = prim.size.x() * prim.size.y();
    const double total = 2 * (ax + ay + az);
    for (int i = 0; i < prim.point_count; ++i) {
      double pick = total > 0 ? rng.uniform(0, total) : 0;
      double u = rng.uniform(-1, 1), v = rng.uniform(-1, 1);
      Vec3 p;
      if (pick < 2 * ax) {
        p = {pick < ax ? half.x() : -half.x(), u * half.y(), v * half.z()};
      } else if (pick < 2 * ax + 2 * ay) {
        p = {u * half.x(), pick < 2 * ax + ay ? half.y() : -half.y(), v * half.z()};
      } else {
        p = {u * half.x(), v * half.y(), pick < 2 * (ax + ay) + az ? half.z() : -half.z()};
      }
      Point pt;
      pt.set_pos(prim.center + p);
      pt.r = prim.color[0];
      pt.g = prim.color[1];
      pt.b = prim.color[2];
      rest.points.push_back(pt);
    }
    primitive_rest_.push_back(std::move(rest));
  }

  if (script_.background_ply) {
    background_ = geom::read_ply(*script_.background_ply);
    background_.frame = geom::Frame::World;
  }

  // Body shells: points inside each part's own cylinder, inset axially and
  // radially so the generating part is also the nearest axis.
  if (script_.body.present) {
    const Skeleton& rest = rest_pose_skeleton();
    const auto& cylinders = seg::default_cylinders();
    for (const auto& spec : cylinders) {
      const int part_index = int(spec.part);
      const int count = script_.body.part_points[part_index];
      Rng rng(mix_seed(script_.seed, 0xb0d7ull, uint64_t(part_index)));
      const Vec3 a = rest.joints[spec.joint_a].position;
      const Vec3 b = rest.joints[spec.joint_b].position;
      const Vec3 ab = b - a;
      const double len = ab.norm();
      const Vec3 axis = ab / len;
      Vec3 n1, n2;
      axis_basis(axis, n1, n2);
      const auto& color = kPartColors[part_index];
      for (int i = 0; i < count; ++i) {
        double t = rng.uniform(0.15, 0.85) * len;
        double radius = spec.radius * (0.25 + 0.45 * rng.uniform());
        double phi = rng.uniform(0, 2 * M_PI);
        Vec3 p = a + t * axis + radius * (std::cos(phi) * n1 + std::sin(phi) * n2);
        Point pt;
        pt.set_pos(p);
        pt.r = color[0];
        pt.g = color[1];
        pt.b = color[2];
        body_rest_.points.push_back(pt);
        body_rest_.labels.push_back(spec.part);
      }
    }
  }
}

SynthFrame SceneSynthesizer::frame_at(int64_t timestamp_us, int64_t sequence_number) const {
  const double t_s = double(timestamp_us) * 1e-6;
  SynthFrame frame;
  frame.timestamp_us = timestamp_us;

  // Static content.
  for (const auto& p : background_.points) {
    frame.world_cloud.points.push_back(
        quantized(p.pos(), p.r, p.g, p.b));
  }
  for (size_t pi = 0; pi < script_.primitives.size(); ++pi) {
    const auto& prim = script_.primitives[pi];
    if (prim.motion.empty()) {
      for (const auto& p : primitive_rest_[pi].points)
        frame.world_cloud.points.push_back(quantized(p.pos(), p.r, p.g, p.b));
    } else {
      // Motion rotates about the vertical axis through the primitive center.
      RigidTransform m = motion_at(prim.motion, t_s);
      for (const auto& p : primitive_rest_[pi].points) {
        Vec3 q = m.rotation * (p.pos() - prim.center) + prim.center + m.translation;
        frame.world_cloud.points.push_back(quantized(q, p.r, p.g, p.b));
      }
    }
  }
  frame.body_offset = frame.world_cloud.size();

  // Body: rigid replay of the rest shells. Yaw rotates about the vertical
  // axis through the rest pelvis.
  frame.world_skeleton = rest_pose_skeleton();
  frame.world_skeleton.fill_confidence(script_.body.joint_confidence);
  if (script_.body.present) {
    RigidTransform m = motion_at(script_.body.motion, t_s);
    const Vec3 pivot(0, 0, 0);
    auto move = [&](const Vec3& p) {
      Vec3 flat = p;
      return m.rotation * (flat - pivot) + pivot + m.translation;
    };
    for (size_t i = 0; i < body_rest_.points.size(); ++i) {
      const auto& p = body_rest_.points[i];
      frame.world_cloud.points.push_back(quantized(move(p.pos()), p.r, p.g, p.b));
      frame.body_labels.push_back(body_rest_.labels[i]);
    }
    for (auto& j : frame.world_skeleton.joints) j.position = move(j.position);
  }

  // Per-camera local frames with visibility filtering.
  for (size_t ci = 0; ci < script_.cameras.size(); ++ci) {
    const CameraSpec& cam = script_.cameras[ci];
    const RigidTransform world_to_cam = camera_poses_[ci].inverse();
    const double cos_limit = std::cos(cam.fov_half_angle_deg * M_PI / 180.0);

    TaggedFrame tagged;
    tagged.descriptor.camera_id = cam.id;
    tagged.descriptor.capture_timestamp_us = timestamp_us;
    tagged.descriptor.sequence_number = sequence_number;
    tagged.cloud.frame = geom::Frame::CameraLocal;
    for (const auto& p : frame.world_cloud.points) {
      Vec3 local = world_to_cam.apply(p.pos());
      double dist = local.norm();
      if (dist < cam.min_range || dist > cam.max_range) continue;
      if (dist > 1e-12 && local.x() / dist < cos_limit) continue;  // outside view cone
      Point lp = p;
      lp.set_pos(local);
      tagged.cloud.points.push_back(lp);
    }
    tagged.descriptor.point_count = int64_t(tagged.cloud.size());
    if (script_.body.present) {
      tagged.skeleton = transform_skeleton(frame.world_skeleton, world_to_cam);
      for (auto& j : tagged.skeleton->joints) j.confidence = script_.body.joint_confidence;
    }
    frame.camera_frames.push_back(std::move(tagged));
  }
  return frame;
}

}  // namespace livevv::capture
