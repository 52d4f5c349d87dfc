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

#include "livevv/scene_script.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>

namespace livevv::capture {

using geom::RigidTransform;
using geom::Vec3;
using nlohmann::json;

RigidTransform CameraSpec::pose() const {
  Vec3 forward = look_at - position;
  if (forward.norm() < 1e-12) throw ConfigError("camera look_at coincides with position");
  forward.normalize();
  Vec3 left = up.cross(forward);
  if (left.norm() < 1e-9) throw ConfigError("camera up vector parallel to view direction");
  left.normalize();
  Vec3 true_up = forward.cross(left);
  geom::Mat3 rotation;
  rotation.col(0) = forward;
  rotation.col(1) = left;
  rotation.col(2) = true_up;
  return {rotation, position};
}

std::array<int, seg::kPartCount> BodySpec::default_part_points() {
  // Group totals: head 3000, chest 3500, arm 2000, leg 2000 (total 10500).
  // Multiples of 100 so every profile ratio in the preset table lands on an
  // integer point count.
  std::array<int, seg::kPartCount> pts{};
  using seg::BodyPart;
  auto set = [&](BodyPart p, int n) { pts[size_t(p)] = n; };
  set(BodyPart::Head, 2000);
  set(BodyPart::Neck, 1000);
  set(BodyPart::Chest, 1500);
  set(BodyPart::Abdomen, 1000);
  set(BodyPart::Pelvis, 1000);
  set(BodyPart::UpperArmLeft, 400);
  set(BodyPart::UpperArmRight, 400);
  set(BodyPart::LowerArmLeft, 300);
  set(BodyPart::LowerArmRight, 300);
  set(BodyPart::HandLeft, 300);
  set(BodyPart::HandRight, 300);
  set(BodyPart::UpperLegLeft, 500);
  set(BodyPart::UpperLegRight, 500);
  set(BodyPart::LowerLegLeft, 500);
  set(BodyPart::LowerLegRight, 500);
  return pts;
}

namespace {

Vec3 parse_vec3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected [x,y,z] array", field);
  for (const auto& v : j)
    if (!v.is_number()) throw ParseError("expected numeric coordinates", field);
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<MotionKey> parse_motion(const json& j, const std::string& field) {
  std::vector<MotionKey> keys;
  if (!j.is_array()) throw ParseError("motion must be an array of keys", field);
  double prev_t = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& k = j[i];
    MotionKey key;
    if (!k.contains("t")) throw ParseError("motion key missing 't'", field);
    key.t_s = k.at("t").get<double>();
    if (key.t_s < prev_t) throw ParseError("motion keys must be time-ordered", field);
    prev_t = key.t_s;
    if (k.contains("pos")) key.position = parse_vec3(k.at("pos"), field + ".pos");
    if (k.contains("yaw_deg")) key.yaw_rad = k.at("yaw_deg").get<double>() * M_PI / 180.0;
    keys.push_back(key);
  }
  return keys;
}

json motion_to_json(const std::vector<MotionKey>& keys) {
  json out = json::array();
  for (const auto& k : keys) {
    out.push_back({{"t", k.t_s},
                   {"pos", {k.position.x(), k.position.y(), k.position.z()}},
                   {"yaw_deg", k.yaw_rad * 180.0 / M_PI}});
  }
  return out;
}

}  // namespace

SceneScript SceneScript::from_json_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open scene script: " + path.string());
  std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  return from_json_text(text, path.string());
}

SceneScript SceneScript::from_json_text(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
  if (!root.is_object()) throw ParseError(origin + ": top level must be an object");

  SceneScript script;
  try {
    if (root.contains("seed")) script.seed = root.at("seed").get<uint64_t>();
    if (root.contains("duration_s")) script.duration_s = root.at("duration_s").get<double>();
    if (script.duration_s <= 0) throw ParseError("duration_s must be positive", "duration_s");

    if (root.contains("background")) {
      const auto& bg = root.at("background");
      if (bg.contains("ply")) script.background_ply = bg.at("ply").get<std::string>();
      if (bg.contains("primitives")) {
        for (const auto& pj : bg.at("primitives")) {
          PrimitiveSpec prim;
          prim.center = parse_vec3(pj.at("center"), "background.primitives.center");
          prim.size = parse_vec3(pj.at("size"), "background.primitives.size");
          prim.point_count = pj.at("points").get<int>();
          if (prim.point_count < 0)
            throw ParseError("primitive points must be >= 0", "background.primitives.points");
          if (pj.contains("color")) {
            const auto& c = pj.at("color");
            if (!c.is_array() || c.size() != 3)
              throw ParseError("color must be [r,g,b]", "background.primitives.color");
            for (int i = 0; i < 3; ++i) prim.color[i] = uint8_t(c[i].get<int>());
          }
          if (pj.contains("motion"))
            prim.motion = parse_motion(pj.at("motion"), "background.primitives.motion");
          script.primitives.push_back(prim);
        }
      }
    }

    if (root.contains("body")) {
      const auto& bj = root.at("body");
      script.body.present = bj.value("present", true);
      script.body.part_points = BodySpec::default_part_points();
      if (bj.contains("part_points")) {
        const auto& pp = bj.at("part_points");
        for (int i = 0; i < seg::kPartCount; ++i) {
          std::string name(seg::kPartNames[i]);
          if (pp.contains(name)) script.body.part_points[i] = pp.at(name).get<int>();
        }
      }
      if (bj.contains("motion")) script.body.motion = parse_motion(bj.at("motion"), "body.motion");
      script.body.joint_confidence = bj.value("joint_confidence", 1.0);
      if (script.body.joint_confidence < 0 || script.body.joint_confidence > 1)
        throw ParseError("joint_confidence must be in [0,1]", "body.joint_confidence");
    } else {
      script.body.part_points = BodySpec::default_part_points();
    }

    if (!root.contains("cameras") || !root.at("cameras").is_array() || root.at("cameras").empty())
      throw ParseError(origin + ": at least one camera required", "cameras");
    for (const auto& cj : root.at("cameras")) {
      CameraSpec cam;
      cam.id = cj.at("id").get<int>();
      cam.position = parse_vec3(cj.at("position"), "cameras.position");
      if (cj.contains("look_at")) cam.look_at = parse_vec3(cj.at("look_at"), "cameras.look_at");
      if (cj.contains("up")) cam.up = parse_vec3(cj.at("up"), "cameras.up");
      cam.fov_half_angle_deg = cj.value("fov_half_angle_deg", 180.0);
      cam.min_range = cj.value("min_range", 0.01);
      cam.max_range = cj.value("max_range", 100.0);
      for (const auto& existing : script.cameras)
        if (existing.id == cam.id) throw ParseError("duplicate camera id", "cameras.id");
      script.cameras.push_back(cam);
    }
  } catch (const json::exception& e) {
    throw ParseError(origin + ": " + e.what());
  }
  return script;
}

std::string SceneScript::to_json_text() const {
  json root;
  root["seed"] = seed;
  root["duration_s"] = duration_s;
  json bg;
  if (background_ply) bg["ply"] = background_ply->string();
  json prims = json::array();
  for (const auto& p : primitives) {
    json pj = {{"center", {p.center.x(), p.center.y(), p.center.z()}},
               {"size", {p.size.x(), p.size.y(), p.size.z()}},
               {"points", p.point_count},
               {"color", {p.color[0], p.color[1], p.color[2]}}};
    if (!p.motion.empty()) pj["motion"] = motion_to_json(p.motion);
    prims.push_back(pj);
  }
  bg["primitives"] = prims;
  root["background"] = bg;

  json bj;
  bj["present"] = body.present;
  json pp;
  for (int i = 0; i < seg::kPartCount; ++i) pp[std::string(seg::kPartNames[i])] = body.part_points[i];
  bj["part_points"] = pp;
  if (!body.motion.empty()) bj["motion"] = motion_to_json(body.motion);
  bj["joint_confidence"] = body.joint_confidence;
  root["body"] = bj;

  json cams = json::array();
  for (const auto& c : cameras) {
    cams.push_back({{"id", c.id},
                    {"position", {c.position.x(), c.position.y(), c.position.z()}},
                    {"look_at", {c.look_at.x(), c.look_at.y(), c.look_at.z()}},
                    {"up", {c.up.x(), c.up.y(), c.up.z()}},
                    {"fov_half_angle_deg", c.fov_half_angle_deg},
                    {"min_range", c.min_range},
                    {"max_range", c.max_range}});
  }
  root["cameras"] = cams;
  return root.dump(2);
}

RigidTransform motion_at(const std::vector<MotionKey>& keys, double t_s) {
  Vec3 pos = Vec3::Zero();
  double yaw = 0;
  if (!keys.empty()) {
    if (t_s <= keys.front().t_s) {
      pos = keys.front().position;
      yaw = keys.front().yaw_rad;
    } else if (t_s >= keys.back().t_s) {
      pos = keys.back().position;
      yaw = keys.back().yaw_rad;
    } else {
      for (size_t i = 0; i + 1 < keys.size(); ++i) {
        if (t_s >= keys[i].t_s && t_s <= keys[i + 1].t_s) {
          double span = keys[i + 1].t_s - keys[i].t_s;
          double a = span > 0 ? (t_s - keys[i].t_s) / span : 1.0;
          pos = (1 - a) * keys[i].position + a * keys[i + 1].position;
          yaw = (1 - a) * keys[i].yaw_rad + a * keys[i + 1].yaw_rad;
          break;
        }
      }
    }
  }
  RigidTransform t = geom::rotation_from_euler({yaw, 0, 0});
  t.translation = pos;
  return t;
}

SceneScript make_desk_script(const DeskSceneOptions& opt) {
  SceneScript script;
  script.seed = opt.seed;
  script.duration_s = opt.duration_s;

  // Room: floor, back wall, side wall, desk. All at least 0.8 m away from
  // any bone of the body (which stays near the origin), so the background
  // never bleeds into the body filters.
  int n = opt.static_points;
  auto add_box = [&](Vec3 center, Vec3 size, int points, std::array<uint8_t, 3> color) {
    PrimitiveSpec p;
    p.center = center;
    p.size = size;
    p.point_count = points;
    p.color = color;
    script.primitives.push_back(p);
  };
  add_box({0, 0, -0.01}, {6.0, 6.0, 0.02}, n * 40 / 100, {120, 110, 100});   // floor
  add_box({-2.5, 0, 1.25}, {0.04, 6.0, 2.5}, n * 25 / 100, {200, 200, 190}); // back wall
  add_box({0, -2.5, 1.25}, {6.0, 0.04, 2.5}, n * 25 / 100, {195, 205, 195}); // side wall
  add_box({1.4, 1.2, 0.35}, {0.8, 0.5, 0.7}, n * 10 / 100, {140, 90, 60});   // desk box

  if (opt.moving_prop) {
    PrimitiveSpec prop;
    prop.center = {1.2, -1.2, 0.15};
    prop.size = {0.3, 0.3, 0.3};
    prop.point_count = std::max(200, n / 50);
    prop.color = {60, 120, 180};
    // Sits still, slides half a meter midway through, then sits again.
    double t1 = opt.duration_s * 0.45, t2 = opt.duration_s * 0.55;
    prop.motion = {{0.0, Vec3::Zero(), 0.0},
                   {t1, Vec3::Zero(), 0.0},
                   {t2, Vec3(0.0, 0.5, 0.0), 0.0},
                   {opt.duration_s, Vec3(0.0, 0.5, 0.0), 0.0}};
    script.primitives.push_back(prop);
  }

  script.body.present = opt.body_present;
  script.body.part_points = opt.part_points ? *opt.part_points : BodySpec::default_part_points();
  if (opt.moving_body) {
    // Gentle sway, staying near the origin.
    script.body.motion = {{0.0, Vec3::Zero(), 0.0},
                          {opt.duration_s * 0.5, Vec3(0.3, 0.2, 0.0), 20.0 * M_PI / 180.0},
                          {opt.duration_s, Vec3::Zero(), 0.0}};
  }

  for (int c = 0; c < opt.camera_count; ++c) {
    CameraSpec cam;
    cam.id = c;
    double angle = 2.0 * M_PI * c / std::max(1, opt.camera_count);
    cam.position = {2.0 * std::cos(angle), 2.0 * std::sin(angle), 1.4};
    cam.look_at = {0, 0, 1.0};
    cam.fov_half_angle_deg = 180;  // full visibility keeps oracle tests exact
    script.cameras.push_back(cam);
  }
  return script;
}

}  // namespace livevv::capture
