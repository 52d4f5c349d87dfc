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

#include <deque>
#include <map>
#include <mutex>
#include <vector>

#include "livevv/frame.hpp"

namespace livevv::capture {

/// Groups N per-camera frame streams into complete SyncedGroups, one per
/// time slot.
///
/// Slot convention: half-open [k*dT, (k+1)*dT); a frame exactly on a boundary
/// belongs to the later slot. When a camera delivers several frames in one
/// slot the latest wins. When a camera misses a slot and reuse is enabled,
/// its most recent earlier frame fills the gap and the group's reused flag is
/// set for that camera. Groups are withheld until every camera has reported
/// at least once; with reuse disabled, incomplete slots are skipped entirely.
///
/// A slot is released once every camera has shown a frame from a later slot
/// (timestamps are non-decreasing per camera, so nothing can still arrive
/// for it), or at finish().
class Synchronizer {
 public:
  explicit Synchronizer(SyncConfig cfg);

  /// Feeds one frame. Frames must arrive with non-decreasing timestamps and
  /// strictly increasing sequence numbers per camera (ConfigError otherwise).
  void push(TaggedFrame frame);

  /// Groups that have become final since the last poll, in slot order.
  std::vector<SyncedGroup> poll();

  /// Declares all streams ended and flushes the remaining slots.
  std::vector<SyncedGroup> finish();

  int64_t groups_emitted() const { return groups_emitted_; }
  int64_t reused_total() const { return reused_total_; }

 private:
  struct CameraState {
    bool seen = false;
    int64_t last_timestamp_us = 0;
    int64_t last_sequence = -1;
    int64_t newest_slot = 0;               // slot of the newest pushed frame
    std::map<int64_t, TaggedFrame> by_slot;  // pending, latest-per-slot
    TaggedFrame last_frame;                // most recent frame overall (for reuse)
    bool has_last = false;
  };

  std::vector<SyncedGroup> release_through(int64_t slot_inclusive);
  int camera_slot_index(int camera_id);

  SyncConfig cfg_;
  std::vector<int> camera_ids_;  // discovery order; index = position in groups
  std::map<int, int> camera_index_;
  std::vector<CameraState> cameras_;
  int64_t next_slot_ = 0;
  bool started_ = false;
  int64_t groups_emitted_ = 0;
  int64_t reused_total_ = 0;
};

/// Thread-safe bounded handoff between a camera worker and the synchronizer
/// stage. Overflow drops the oldest pending frame and counts it.
class BoundedFrameQueue {
 public:
  explicit BoundedFrameQueue(size_t depth = 8) : depth_(depth) {}

  void push(TaggedFrame frame) {
    std::lock_guard lock(mu_);
    if (queue_.size() >= depth_) {
      queue_.pop_front();
      ++dropped_;
    }
    queue_.push_back(std::move(frame));
  }

  std::vector<TaggedFrame> drain() {
    std::lock_guard lock(mu_);
    std::vector<TaggedFrame> out(std::make_move_iterator(queue_.begin()),
                                 std::make_move_iterator(queue_.end()));
    queue_.clear();
    return out;
  }

  int64_t dropped() const {
    std::lock_guard lock(mu_);
    return dropped_;
  }

 private:
  mutable std::mutex mu_;
  std::deque<TaggedFrame> queue_;
  size_t depth_;
  int64_t dropped_ = 0;
};

}  // namespace livevv::capture
