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

#include <cstdint>
#include <variant>
#include <vector>

#include "livevv/cube_grid.hpp"
#include "livevv/geometry.hpp"
#include "livevv/saliency.hpp"

namespace livevv::wire {

// Frame layout (all integers little-endian):
//   magic "LVVS" | version u8 (=1) | type u8 | payload_length u32 | payload
// Points travel as 3 x float32 + r,g,b u8 = 15 bytes.

inline constexpr uint8_t kVersion = 1;
inline constexpr size_t kHeaderSize = 10;
inline constexpr char kMagic[4] = {'L', 'V', 'V', 'S'};
inline constexpr uint32_t kMaxPayload = 1u << 30;  // 1 GiB sanity bound

enum class MessageType : uint8_t {
  Hello = 0,
  DynamicChunk = 1,
  StaticUpdate = 2,
  LayerUpgrade = 3,
  ViewportReport = 4,
  ThroughputReport = 5,
  End = 6,
};

struct PartPayload {
  uint8_t part_label = 0;
  std::vector<geom::Point> points;
};

struct FramePayload {
  int64_t slot = 0;
  std::vector<PartPayload> parts;
};

struct HelloMsg {
  std::vector<uint8_t> blob;  // opaque greeting, usually empty
};

struct DynamicChunkMsg {
  uint32_t chunk_index = 0;
  uint8_t level = 0;
  std::vector<FramePayload> frames;
};

struct LayerUpgradeMsg {
  uint32_t chunk_index = 0;
  uint8_t from_level = 0;
  uint8_t to_level = 0;
  std::vector<FramePayload> frames;  // delta points only
};

struct CubeUpdatePayload {
  reuse::CellIndex index;
  uint8_t action = 0;  // 0 = replace, 1 = clear
  float quality_fraction = 1.0f;
  std::vector<geom::Point> points;
};

struct StaticUpdateMsg {
  uint32_t chunk_index = 0;
  uint8_t level = 0;
  std::vector<CubeUpdatePayload> updates;
};

struct ViewportReportMsg {
  std::vector<reuse::ViewportSample> samples;
};

struct ThroughputReportMsg {
  uint32_t chunk_index = 0;
  uint64_t bytes_received = 0;
  int64_t recv_start_us = 0;
  int64_t recv_end_us = 0;
};

struct EndMsg {};

using Message = std::variant<HelloMsg, DynamicChunkMsg, StaticUpdateMsg, LayerUpgradeMsg,
                             ViewportReportMsg, ThroughputReportMsg, EndMsg>;

MessageType type_of(const Message& msg);

/// Serializes one message into a complete wire frame.
std::vector<uint8_t> encode(const Message& msg);

/// Parses one complete wire frame. Every malformed input — bad magic,
/// unknown version or type, length mismatch, truncated or oversized payload
/// — raises ProtocolError carrying the offending byte offset. Never reads
/// out of bounds.
Message decode(const std::vector<uint8_t>& bytes);
Message decode(const uint8_t* data, size_t size);

/// Incremental frame splitter for stream transports: feed arbitrary byte
/// slices, pull complete frames.
class FrameAssembler {
 public:
  void feed(const uint8_t* data, size_t size);
  /// Next complete frame (decoded), or nullopt if more bytes are needed.
  std::optional<Message> next();

 private:
  std::vector<uint8_t> buffer_;
  size_t cursor_ = 0;
};

}  // namespace livevv::wire
