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

#include "livevv/synchronizer.hpp"

#include <algorithm>

namespace livevv::capture {

Synchronizer::Synchronizer(SyncConfig cfg) : cfg_(cfg) {
  if (cfg_.camera_count < 1) throw ConfigError("camera_count must be >= 1");
  if (cfg_.rate_num <= 0 || cfg_.rate_den <= 0) throw ConfigError("slot rate must be positive");
}

int Synchronizer::camera_slot_index(int camera_id) {
  auto it = camera_index_.find(camera_id);
  if (it != camera_index_.end()) return it->second;
  if (int(camera_ids_.size()) >= cfg_.camera_count) {
    throw ConfigError("more camera ids than configured camera_count");
  }
  int idx = int(camera_ids_.size());
  camera_ids_.push_back(camera_id);
  camera_index_[camera_id] = idx;
  cameras_.emplace_back();
  return idx;
}

void Synchronizer::push(TaggedFrame frame) {
  const auto& d = frame.descriptor;
  CameraState& cam = cameras_[camera_slot_index(d.camera_id)];
  if (cam.seen) {
    if (d.capture_timestamp_us < cam.last_timestamp_us)
      throw ConfigError("per-camera timestamps must be non-decreasing");
    if (d.sequence_number <= cam.last_sequence)
      throw ConfigError("per-camera sequence numbers must be strictly increasing");
  }
  cam.last_timestamp_us = d.capture_timestamp_us;
  cam.last_sequence = d.sequence_number;

  const int64_t slot = cfg_.slot_of(d.capture_timestamp_us);
  if (!cam.seen) {
    cam.seen = true;
    cam.newest_slot = slot;
    // First report from the last missing camera decides where emission starts:
    // earlier slots are withheld, never padded.
    if (int(camera_ids_.size()) == cfg_.camera_count &&
        std::all_of(cameras_.begin(), cameras_.end(), [](const auto& c) { return c.seen; })) {
      started_ = true;
      int64_t start = slot;
      for (const auto& c : cameras_) {
        if (!c.by_slot.empty()) start = std::max(start, c.by_slot.begin()->first);
      }
      next_slot_ = start;
    }
  }
  cam.newest_slot = std::max(cam.newest_slot, slot);
  cam.by_slot[slot] = std::move(frame);  // duplicate slot: the later frame wins
}

std::vector<SyncedGroup> Synchronizer::poll() {
  if (!started_) return {};
  int64_t bound = std::numeric_limits<int64_t>::max();
  for (const auto& cam : cameras_) bound = std::min(bound, cam.newest_slot - 1);
  return release_through(bound);
}

std::vector<SyncedGroup> Synchronizer::finish() {
  if (!started_) return {};
  int64_t bound = std::numeric_limits<int64_t>::min();
  for (const auto& cam : cameras_) bound = std::max(bound, cam.newest_slot);
  return release_through(bound);
}

std::vector<SyncedGroup> Synchronizer::release_through(int64_t slot_inclusive) {
  std::vector<SyncedGroup> out;
  if (slot_inclusive < next_slot_) return out;

  // Frames are grouped in sorted camera-id order, so group layout does not
  // depend on arrival interleaving.
  std::vector<int> order(camera_ids_);
  std::sort(order.begin(), order.end());

  for (int64_t slot = next_slot_; slot <= slot_inclusive; ++slot) {
    SyncedGroup group;
    group.slot_index = slot;
    group.frames.reserve(order.size());
    group.reused_flags.assign(order.size(), false);
    bool complete = true;
    for (size_t pos = 0; pos < order.size(); ++pos) {
      CameraState& cam = cameras_[camera_index_[order[pos]]];
      // Consume everything up to this slot; the newest such frame is either
      // this slot's own frame or the reuse candidate.
      while (!cam.by_slot.empty() && cam.by_slot.begin()->first <= slot) {
        auto node = cam.by_slot.extract(cam.by_slot.begin());
        cam.last_frame = std::move(node.mapped());
        cam.has_last = true;
      }
      const bool own = cam.has_last &&
                       cfg_.slot_of(cam.last_frame.descriptor.capture_timestamp_us) == slot;
      if (!own) {
        if (!cfg_.reuse_on_loss || !cam.has_last) {
          complete = false;
          break;
        }
        group.reused_flags[pos] = true;
      }
      group.frames.push_back(cam.last_frame);
    }
    if (!complete) continue;  // reuse disabled: the incomplete slot is skipped
    for (bool flag : group.reused_flags)
      if (flag) ++reused_total_;
    ++groups_emitted_;
    out.push_back(std::move(group));
  }
  next_slot_ = slot_inclusive + 1;
  return out;
}

}  // namespace livevv::capture
