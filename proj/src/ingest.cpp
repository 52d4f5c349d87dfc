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

#include "livevv/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "livevv/ply_io.hpp"

namespace livevv::capture {

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest_path) {
  std::ifstream is(manifest_path);
  if (!is) throw ParseError("cannot open manifest: " + manifest_path.string());
  const auto base = manifest_path.parent_path();

  std::vector<ManifestEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string field;
    ManifestEntry e;
    try {
      if (!std::getline(ls, field, ',')) throw std::invalid_argument("camera_id");
      e.camera_id = std::stoi(field);
      if (!std::getline(ls, field, ',')) throw std::invalid_argument("timestamp_us");
      e.timestamp_us = std::stoll(field);
      if (!std::getline(ls, field, ',')) throw std::invalid_argument("ply_path");
    } catch (const std::exception&) {
      throw ParseError("bad manifest row", "camera_id,timestamp_us,ply_path", line_no);
    }
    e.ply_path = field;
    if (e.ply_path.is_relative()) e.ply_path = base / e.ply_path;
    if (std::getline(ls, field, ',') && !field.empty()) {
      std::filesystem::path sk = field;
      e.skeleton_path = sk.is_relative() ? base / sk : sk;
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

Skeleton read_skeleton_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw FormatError("cannot open skeleton file: " + path.string());
  Skeleton s;
  std::string line;
  for (int j = 0; j < kJointCount; ++j) {
    if (!std::getline(is, line)) throw FormatError("skeleton file too short: " + path.string());
    std::istringstream ls(line);
    std::string field;
    double v[4];
    for (int k = 0; k < 4; ++k) {
      if (!std::getline(ls, field, ','))
        throw FormatError("skeleton row needs x,y,z,confidence: " + path.string());
      v[k] = std::stod(field);
    }
    s.joints[j].position = {v[0], v[1], v[2]};
    s.joints[j].confidence = v[3];
  }
  return s;
}

void write_skeleton_csv(const std::filesystem::path& path, const Skeleton& s) {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot write skeleton file: " + path.string());
  os.precision(17);
  for (const auto& j : s.joints) {
    os << j.position.x() << ',' << j.position.y() << ',' << j.position.z() << ','
       << j.confidence << '\n';
  }
}

PlySequenceSource::PlySequenceSource(const std::filesystem::path& manifest_path)
    : entries_(read_manifest(manifest_path)) {
  std::stable_sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    if (a.timestamp_us != b.timestamp_us) return a.timestamp_us < b.timestamp_us;
    return a.camera_id < b.camera_id;
  });
}

std::optional<TaggedFrame> PlySequenceSource::next() {
  if (cursor_ >= entries_.size()) return std::nullopt;
  const ManifestEntry& e = entries_[cursor_++];
  int64_t seq = next_sequence_[e.camera_id]++;

  TaggedFrame frame;
  frame.descriptor.camera_id = e.camera_id;
  frame.descriptor.capture_timestamp_us = e.timestamp_us;
  frame.descriptor.sequence_number = seq;
  if (!std::filesystem::exists(e.ply_path)) {
    throw StreamError("missing frame file " + e.ply_path.string(), e.camera_id, seq);
  }
  frame.cloud = geom::read_ply(e.ply_path);
  frame.cloud.frame = geom::Frame::CameraLocal;
  frame.descriptor.point_count = int64_t(frame.cloud.size());
  if (e.skeleton_path) frame.skeleton = read_skeleton_csv(*e.skeleton_path);
  return frame;
}

}  // namespace livevv::capture
