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

#include "livevv/calibration.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace livevv::calib {

using capture::Skeleton;
using capture::SyncedGroup;
using geom::PointCloud;
using geom::RigidTransform;
using geom::Vec3;

std::array<bool, capture::kJointCount> denoise_skeleton(const Skeleton& s, double threshold) {
  std::array<bool, capture::kJointCount> mask{};
  for (int j = 0; j < capture::kJointCount; ++j) {
    mask[j] = s.joints[j].confidence >= threshold;
  }
  return mask;
}

RigidTransform calibrate_pair(const Skeleton& sub, const Skeleton& master, double threshold) {
  const auto sub_mask = denoise_skeleton(sub, threshold);
  const auto master_mask = denoise_skeleton(master, threshold);

  std::vector<Vec3> source, target;
  std::vector<double> weights;
  for (int j = 0; j < capture::kJointCount; ++j) {
    if (!sub_mask[j] || !master_mask[j]) continue;
    source.push_back(sub.joints[j].position);
    target.push_back(master.joints[j].position);
    weights.push_back(sub.joints[j].confidence * master.joints[j].confidence);
  }
  if (source.size() < 3) {
    throw CalibrationDegenerateError("fewer than 3 joints pass threshold in both skeletons");
  }
  return geom::estimate_rigid_transform(source, target, weights);
}

const RigidTransform& CalibrationState::transform(int camera_id) const {
  static const RigidTransform identity{};
  if (camera_id == master_id_) return identity;
  auto it = transforms_.find(camera_id);
  if (it == transforms_.end()) {
    throw NotCalibratedError("camera " + std::to_string(camera_id) + " has no calibration");
  }
  return it->second;
}

void CalibrationState::refresh(const SyncedGroup& group) {
  if (last_update_slot_ != std::numeric_limits<int64_t>::min() &&
      group.slot_index - last_update_slot_ < cfg_.refresh_interval_slots) {
    return;
  }
  // Locate the master frame and require a usable skeleton; with the person
  // out of every view the transforms simply stay frozen.
  const capture::TaggedFrame* master_frame = nullptr;
  for (const auto& f : group.frames) {
    if (f.descriptor.camera_id == master_id_) master_frame = &f;
  }
  if (!master_frame || !master_frame->skeleton.has_value()) return;

  last_update_slot_ = group.slot_index;
  ++refresh_attempts_;
  for (const auto& f : group.frames) {
    const int cam = f.descriptor.camera_id;
    if (cam == master_id_) continue;
    if (!f.skeleton.has_value()) {
      ++failures_[cam];
      continue;
    }
    try {
      transforms_[cam] =
          calibrate_pair(*f.skeleton, *master_frame->skeleton, cfg_.confidence_threshold);
    } catch (const CalibrationDegenerateError&) {
      ++failures_[cam];  // previous transform, if any, stays in force
    }
  }
}

void CalibrationState::save(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot write calibration state: " + path.string());
  os.precision(17);
  os << "master " << master_id_ << "\n";
  for (const auto& [cam, t] : transforms_) {
    os << cam;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) os << ' ' << t.rotation(r, c);
    for (int r = 0; r < 3; ++r) os << ' ' << t.translation(r);
    os << "\n";
  }
}

CalibrationState CalibrationState::load(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot read calibration state: " + path.string());
  std::string tag;
  int master = 0;
  if (!(is >> tag >> master) || tag != "master")
    throw FormatError("calibration state missing master line: " + path.string());
  CalibrationState state(master, CalibrationConfig{});
  int cam;
  while (is >> cam) {
    RigidTransform t;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (!(is >> t.rotation(r, c)))
          throw FormatError("truncated calibration row: " + path.string());
    for (int r = 0; r < 3; ++r)
      if (!(is >> t.translation(r)))
        throw FormatError("truncated calibration row: " + path.string());
    if (!t.is_rigid(1e-6)) throw FormatError("non-rigid rotation in calibration state");
    state.transforms_[cam] = t;
  }
  return state;
}

PointCloud merge_group(const SyncedGroup& group, const CalibrationState& state) {
  // Master first, then subs by ascending camera id: a fixed order so merged
  // clouds are reproducible no matter how the group was assembled.
  std::vector<const capture::TaggedFrame*> order;
  order.reserve(group.frames.size());
  for (const auto& f : group.frames) order.push_back(&f);
  std::sort(order.begin(), order.end(), [&](const auto* a, const auto* b) {
    const bool am = a->descriptor.camera_id == state.master_camera_id();
    const bool bm = b->descriptor.camera_id == state.master_camera_id();
    if (am != bm) return am;
    return a->descriptor.camera_id < b->descriptor.camera_id;
  });

  PointCloud merged;
  merged.frame = geom::Frame::World;
  size_t total = 0;
  for (const auto* f : order) total += f->cloud.size();
  merged.points.reserve(total);
  for (const auto* f : order) {
    const int cam = f->descriptor.camera_id;
    if (!state.is_calibrated(cam)) {
      throw NotCalibratedError("camera " + std::to_string(cam) + " is not calibrated");
    }
    if (cam == state.master_camera_id()) {
      merged.append(f->cloud);
    } else {
      const RigidTransform& t = state.transform(cam);
      for (const auto& p : f->cloud.points) {
        geom::Point q = p;
        q.set_pos(t.apply(p.pos()));
        merged.points.push_back(q);
      }
    }
  }
  return merged;
}

}  // namespace livevv::calib
