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

#include "livevv/segmentation.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "livevv/rng.hpp"

namespace livevv::seg {

using geom::Point;
using geom::PointCloud;
using geom::Vec3;

namespace {

struct CylinderGeom {
  Vec3 base;
  Vec3 axis;    // unit
  double length;
  double radius;
  double padding;
};

// Distance to the (clamped) axis segment, or a large value when the point is
// outside the padded cylinder.
double membership_distance(const CylinderGeom& c, const Vec3& p) {
  const Vec3 d = p - c.base;
  const double t = d.dot(c.axis);
  if (t < -c.padding || t > c.length + c.padding) return std::numeric_limits<double>::infinity();
  const double tc = std::clamp(t, 0.0, c.length);
  const double dist = (d - tc * c.axis).norm();
  const double overhang = t < 0 ? -t : (t > c.length ? t - c.length : 0.0);
  const double seg_dist = std::hypot(dist, overhang);
  if (seg_dist > c.radius) return std::numeric_limits<double>::infinity();
  return seg_dist;
}

}  // namespace

SegmentedFrame segment(const PointCloud& cloud, const capture::Skeleton& skel,
                       const std::array<CylinderSpec, kPartCount>& specs, int64_t slot_index) {
  std::array<CylinderGeom, kPartCount> geoms;
  for (int i = 0; i < kPartCount; ++i) {
    const CylinderSpec& s = specs[i];
    if (s.radius <= 0) throw ConfigError("cylinder radius must be positive");
    if (s.joint_a == s.joint_b || s.joint_a < 0 || s.joint_b < 0 ||
        s.joint_a >= capture::kJointCount || s.joint_b >= capture::kJointCount) {
      throw ConfigError("cylinder axis joints invalid");
    }
    const Vec3 a = skel.joints[s.joint_a].position;
    const Vec3 b = skel.joints[s.joint_b].position;
    const double len = (b - a).norm();
    geoms[size_t(s.part)] = {a, len > 0 ? Vec3((b - a) / len) : Vec3::UnitZ(), len, s.radius,
                             s.end_padding};
  }

  SegmentedFrame out;
  out.slot_index = slot_index;
  out.static_scene.frame = cloud.frame;
  for (auto& part : out.body_parts) part.frame = cloud.frame;

  for (const Point& p : cloud.points) {
    const Vec3 pos = p.pos();
    int best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kPartCount; ++i) {
      const double d = membership_distance(geoms[i], pos);
      if (d < best_dist) {  // ties keep the earlier (lower) part index
        best_dist = d;
        best = i;
      }
    }
    if (best >= 0 && std::isfinite(best_dist)) {
      out.body_parts[best].points.push_back(p);
    } else {
      out.static_scene.points.push_back(p);
    }
  }
  return out;
}

PointCloud decimate_part(const PointCloud& cloud, double kept_ratio, uint64_t seed) {
  if (kept_ratio <= 0 || kept_ratio > 1) throw ConfigError("kept_ratio must be in (0,1]");
  if (kept_ratio == 1.0 || cloud.empty()) return cloud;
  const size_t keep = size_t(std::llround(double(cloud.size()) * kept_ratio));
  PointCloud out;
  out.frame = cloud.frame;
  out.points.reserve(keep);
  for (size_t i : sample_indices(cloud.size(), keep, seed)) out.points.push_back(cloud.points[i]);
  return out;
}

PointCloud decimate_part_voxel(const PointCloud& cloud, double kept_ratio) {
  if (kept_ratio <= 0 || kept_ratio > 1) throw ConfigError("kept_ratio must be in (0,1]");
  if (kept_ratio == 1.0 || cloud.size() < 2) return cloud;

  Vec3 lo = cloud.points.front().pos(), hi = lo;
  for (const Point& p : cloud.points) {
    lo = lo.cwiseMin(p.pos());
    hi = hi.cwiseMax(p.pos());
  }
  const Vec3 extent = (hi - lo).cwiseMax(1e-9);
  // Cell count ≈ target kept count assuming near-uniform density.
  const double target = double(cloud.size()) * kept_ratio;
  const double cell = std::cbrt(extent.prod() / target);

  std::unordered_set<uint64_t> seen;
  PointCloud out;
  out.frame = cloud.frame;
  for (const Point& p : cloud.points) {
    const Vec3 rel = (p.pos() - lo) / cell;
    const uint64_t key = mix_seed(uint64_t(int64_t(std::floor(rel.x()))),
                                  uint64_t(int64_t(std::floor(rel.y()))),
                                  uint64_t(int64_t(std::floor(rel.z()))));
    if (seen.insert(key).second) out.points.push_back(p);
  }
  return out;
}

const std::map<std::string, DecimationProfile>& DecimationProfile::presets() {
  static const std::map<std::string, DecimationProfile> table = {
      {"base", {"base", {1.00, 1.00, 1.00, 1.00}}},
      {"p1", {"p1", {1.00, 0.60, 0.25, 0.80}}},
      {"p2", {"p2", {0.80, 0.55, 0.05, 0.60}}},
      {"p3", {"p3", {0.80, 0.40, 0.05, 0.40}}},
      {"p4a", {"p4a", {0.70, 0.20, 0.70, 0.25}}},
      {"p4b", {"p4b", {0.44, 0.44, 0.44, 0.44}}},
      {"p5", {"p5", {0.50, 0.25, 0.15, 0.25}}},
  };
  return table;
}

DecimationProfile DecimationProfile::preset(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("unknown decimation preset: " + name);
  return it->second;
}

std::map<std::string, DecimationProfile> DecimationProfile::load_file(
    const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open decimation profile file: " + path.string());
  std::map<std::string, DecimationProfile> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string field;
    DecimationProfile profile;
    if (!std::getline(ls, profile.name, ','))
      throw ParseError("profile row needs name,head,chest,arm,leg", "name", line_no);
    for (int g = 0; g < kGroupCount; ++g) {
      if (!std::getline(ls, field, ','))
        throw ParseError("profile row needs 4 percentages", std::string(kGroupNames[g]), line_no);
      double pct = std::stod(field);
      if (pct <= 0 || pct > 100)
        throw ParseError("kept percentage must be in (0,100]", std::string(kGroupNames[g]),
                         line_no);
      profile.kept_ratio[g] = pct / 100.0;
    }
    out[profile.name] = profile;
  }
  return out;
}

std::array<PointCloud, kPartCount> decimate_frame(const SegmentedFrame& frame,
                                                  const DecimationProfile& profile,
                                                  uint64_t seed) {
  std::array<PointCloud, kPartCount> out;
  for (int i = 0; i < kPartCount; ++i) {
    const double ratio = profile.kept_ratio[size_t(group_of(BodyPart(i)))];
    out[i] = decimate_part(frame.body_parts[i], ratio,
                           mix_seed(seed, uint64_t(frame.slot_index), uint64_t(i)));
  }
  return out;
}

int64_t dynamic_bitrate_bits(const std::vector<std::array<PointCloud, kPartCount>>& frame_parts) {
  int64_t points = 0;
  for (const auto& parts : frame_parts) {
    for (const auto& cloud : parts) points += int64_t(cloud.size());
  }
  return points * kBytesPerPoint * 8;
}

}  // namespace livevv::seg
