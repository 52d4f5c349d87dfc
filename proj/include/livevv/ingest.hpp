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

#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "livevv/frame.hpp"

namespace livevv::capture {

struct ManifestEntry {
  int camera_id = 0;
  int64_t timestamp_us = 0;
  std::filesystem::path ply_path;
  std::optional<std::filesystem::path> skeleton_path;
};

/// Manifest rows: `camera_id,timestamp_us,ply_path[,skeleton_path]`, one per
/// line, '#' comments allowed. Paths are resolved relative to the manifest's
/// directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest_path);

/// Skeleton sidecar: 32 lines of `x,y,z,confidence`.
Skeleton read_skeleton_csv(const std::filesystem::path& path);
void write_skeleton_csv(const std::filesystem::path& path, const Skeleton& s);

/// Replays recorded per-camera PLY sequences as a TaggedFrame stream. Frames
/// come out in (timestamp, camera) order; per camera that is timestamp order
/// with sequence numbers 0,1,2,... A missing or unreadable file raises
/// StreamError naming the camera and sequence — frames already emitted stay
/// delivered.
class PlySequenceSource {
 public:
  explicit PlySequenceSource(const std::filesystem::path& manifest_path);

  /// Next frame, or nullopt at end of stream.
  std::optional<TaggedFrame> next();

  size_t total_frames() const { return entries_.size(); }

 private:
  std::vector<ManifestEntry> entries_;  // globally sorted
  std::map<int, int64_t> next_sequence_;
  size_t cursor_ = 0;
};

}  // namespace livevv::capture
