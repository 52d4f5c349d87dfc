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

#include "livevv/wire.hpp"

#include <cmath>
#include <cstring>

namespace livevv::wire {

namespace {

class ByteWriter {
 public:
  explicit ByteWriter(std::vector<uint8_t>& out) : out_(out) {}

  void u8(uint8_t v) { out_.push_back(v); }
  void u16(uint16_t v) { raw(&v, 2); }
  void u32(uint32_t v) { raw(&v, 4); }
  void u64(uint64_t v) { raw(&v, 8); }
  void i32(int32_t v) { raw(&v, 4); }
  void i64(int64_t v) { raw(&v, 8); }
  void f32(float v) { raw(&v, 4); }
  void f64(double v) { raw(&v, 8); }

  void point(const geom::Point& p) {
    f32(float(p.x));
    f32(float(p.y));
    f32(float(p.z));
    u8(p.r);
    u8(p.g);
    u8(p.b);
  }

  void raw(const void* data, size_t n) {
    const auto* bytes = static_cast<const uint8_t*>(data);
    out_.insert(out_.end(), bytes, bytes + n);  // little-endian host assumed
  }

 private:
  std::vector<uint8_t>& out_;
};

class ByteReader {
 public:
  ByteReader(const uint8_t* data, size_t size, size_t base_offset)
      : data_(data), size_(size), base_(base_offset) {}

  size_t offset() const { return base_ + pos_; }
  size_t remaining() const { return size_ - pos_; }
  bool done() const { return pos_ == size_; }

  uint8_t u8() { return *take(1); }
  uint16_t u16() { return read<uint16_t>(); }
  uint32_t u32() { return read<uint32_t>(); }
  uint64_t u64() { return read<uint64_t>(); }
  int32_t i32() { return read<int32_t>(); }
  int64_t i64() { return read<int64_t>(); }
  float f32() { return read<float>(); }
  double f64() { return read<double>(); }

  geom::Point point() {
    geom::Point p;
    p.x = f32();
    p.y = f32();
    p.z = f32();
    p.r = u8();
    p.g = u8();
    p.b = u8();
    return p;
  }

  /// Guards count*item_size element loops against length lies.
  void expect_capacity(uint64_t count, uint64_t item_size, const char* what) {
    if (count > uint64_t(remaining()) / std::max<uint64_t>(item_size, 1)) {
      throw ProtocolError(std::string("declared ") + what + " count exceeds payload", offset());
    }
  }

  void expect_done() {
    if (!done()) throw ProtocolError("trailing bytes after payload", offset());
  }

 private:
  template <typename T>
  T read() {
    T v;
    std::memcpy(&v, take(sizeof(T)), sizeof(T));
    return v;
  }

  const uint8_t* take(size_t n) {
    if (n > remaining()) throw ProtocolError("truncated payload", offset());
    const uint8_t* p = data_ + pos_;
    pos_ += n;
    return p;
  }

  const uint8_t* data_;
  size_t size_;
  size_t base_;
  size_t pos_ = 0;
};

void write_frames(ByteWriter& w, const std::vector<FramePayload>& frames) {
  w.u16(uint16_t(frames.size()));
  for (const auto& frame : frames) {
    w.u64(uint64_t(frame.slot));
    w.u8(uint8_t(frame.parts.size()));
    for (const auto& part : frame.parts) {
      w.u8(part.part_label);
      w.u32(uint32_t(part.points.size()));
      for (const auto& p : part.points) w.point(p);
    }
  }
}

std::vector<FramePayload> read_frames(ByteReader& r) {
  const uint16_t frame_count = r.u16();
  std::vector<FramePayload> frames;
  r.expect_capacity(frame_count, 9, "frame");
  frames.reserve(frame_count);
  for (uint16_t f = 0; f < frame_count; ++f) {
    FramePayload frame;
    frame.slot = int64_t(r.u64());
    const uint8_t part_count = r.u8();
    r.expect_capacity(part_count, 5, "part");
    frame.parts.reserve(part_count);
    for (uint8_t p = 0; p < part_count; ++p) {
      PartPayload part;
      part.part_label = r.u8();
      const uint32_t n = r.u32();
      r.expect_capacity(n, 15, "point");
      part.points.reserve(n);
      for (uint32_t i = 0; i < n; ++i) part.points.push_back(r.point());
      frame.parts.push_back(std::move(part));
    }
    frames.push_back(std::move(frame));
  }
  return frames;
}

}  // namespace

MessageType type_of(const Message& msg) {
  return MessageType(uint8_t(msg.index()));  // variant order mirrors the enum
}

std::vector<uint8_t> encode(const Message& msg) {
  std::vector<uint8_t> out;
  ByteWriter w(out);
  w.raw(kMagic, 4);
  w.u8(kVersion);
  w.u8(uint8_t(type_of(msg)));
  w.u32(0);  // payload length, patched below

  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, HelloMsg>) {
          w.raw(m.blob.data(), m.blob.size());
        } else if constexpr (std::is_same_v<T, DynamicChunkMsg>) {
          w.u32(m.chunk_index);
          w.u8(m.level);
          write_frames(w, m.frames);
        } else if constexpr (std::is_same_v<T, LayerUpgradeMsg>) {
          w.u32(m.chunk_index);
          w.u8(m.from_level);
          w.u8(m.to_level);
          write_frames(w, m.frames);
        } else if constexpr (std::is_same_v<T, StaticUpdateMsg>) {
          w.u32(m.chunk_index);
          w.u8(m.level);
          w.u32(uint32_t(m.updates.size()));
          for (const auto& u : m.updates) {
            w.i32(u.index.x);
            w.i32(u.index.y);
            w.i32(u.index.z);
            w.u8(u.action);
            w.f32(u.quality_fraction);
            w.u32(uint32_t(u.points.size()));
            for (const auto& p : u.points) w.point(p);
          }
        } else if constexpr (std::is_same_v<T, ViewportReportMsg>) {
          w.u32(uint32_t(m.samples.size()));
          for (const auto& s : m.samples) {
            w.i64(s.timestamp_us);
            w.f64(s.position.x());
            w.f64(s.position.y());
            w.f64(s.position.z());
            w.f64(s.orientation.yaw);
            w.f64(s.orientation.pitch);
            w.f64(s.orientation.roll);
          }
        } else if constexpr (std::is_same_v<T, ThroughputReportMsg>) {
          w.u32(m.chunk_index);
          w.u64(m.bytes_received);
          w.i64(m.recv_start_us);
          w.i64(m.recv_end_us);
        } else if constexpr (std::is_same_v<T, EndMsg>) {
          // empty payload
        }
      },
      msg);

  const uint32_t payload_len = uint32_t(out.size() - kHeaderSize);
  std::memcpy(out.data() + 6, &payload_len, 4);
  return out;
}

Message decode(const std::vector<uint8_t>& bytes) { return decode(bytes.data(), bytes.size()); }

Message decode(const uint8_t* data, size_t size) {
  if (size < kHeaderSize) throw ProtocolError("frame shorter than header", size);
  if (std::memcmp(data, kMagic, 4) != 0) throw ProtocolError("bad magic", 0);
  if (data[4] != kVersion) throw ProtocolError("unsupported version", 4);
  const uint8_t type = data[5];
  if (type > uint8_t(MessageType::End)) throw ProtocolError("unknown message type", 5);
  uint32_t payload_len;
  std::memcpy(&payload_len, data + 6, 4);
  if (payload_len > kMaxPayload) throw ProtocolError("payload length exceeds limit", 6);
  if (size_t(payload_len) + kHeaderSize != size)
    throw ProtocolError("payload length disagrees with frame size", 6);

  ByteReader r(data + kHeaderSize, payload_len, kHeaderSize);
  switch (MessageType(type)) {
    case MessageType::Hello: {
      HelloMsg m;
      m.blob.assign(data + kHeaderSize, data + size);
      return m;
    }
    case MessageType::DynamicChunk: {
      DynamicChunkMsg m;
      m.chunk_index = r.u32();
      m.level = r.u8();
      m.frames = read_frames(r);
      r.expect_done();
      return m;
    }
    case MessageType::LayerUpgrade: {
      LayerUpgradeMsg m;
      m.chunk_index = r.u32();
      m.from_level = r.u8();
      m.to_level = r.u8();
      if (m.from_level > m.to_level)
        throw ProtocolError("upgrade levels out of order", r.offset());
      m.frames = read_frames(r);
      r.expect_done();
      return m;
    }
    case MessageType::StaticUpdate: {
      StaticUpdateMsg m;
      m.chunk_index = r.u32();
      m.level = r.u8();
      const uint32_t count = r.u32();
      r.expect_capacity(count, 25, "cube update");
      m.updates.reserve(count);
      for (uint32_t i = 0; i < count; ++i) {
        CubeUpdatePayload u;
        u.index.x = r.i32();
        u.index.y = r.i32();
        u.index.z = r.i32();
        u.action = r.u8();
        if (u.action > 1) throw ProtocolError("unknown cube action", r.offset() - 1);
        u.quality_fraction = r.f32();
        if (!(u.quality_fraction > 0.f) || u.quality_fraction > 1.f)
          throw ProtocolError("quality fraction outside (0,1]", r.offset() - 4);
        const uint32_t n = r.u32();
        if (u.action == 1 && n != 0)
          throw ProtocolError("clear update must carry zero points", r.offset() - 4);
        r.expect_capacity(n, 15, "point");
        u.points.reserve(n);
        for (uint32_t k = 0; k < n; ++k) u.points.push_back(r.point());
        m.updates.push_back(std::move(u));
      }
      r.expect_done();
      return m;
    }
    case MessageType::ViewportReport: {
      ViewportReportMsg m;
      const uint32_t count = r.u32();
      r.expect_capacity(count, 56, "viewport sample");
      m.samples.reserve(count);
      for (uint32_t i = 0; i < count; ++i) {
        reuse::ViewportSample s;
        s.timestamp_us = r.i64();
        const double px = r.f64(), py = r.f64(), pz = r.f64();
        const double yaw = r.f64(), pitch = r.f64(), roll = r.f64();
        if (!std::isfinite(px) || !std::isfinite(py) || !std::isfinite(pz) ||
            !std::isfinite(yaw) || !std::isfinite(pitch) || !std::isfinite(roll)) {
          throw ProtocolError("non-finite viewport sample", r.offset());
        }
        s.position = {px, py, pz};
        s.orientation = geom::EulerAngles(yaw, pitch, roll);
        m.samples.push_back(s);
      }
      r.expect_done();
      return m;
    }
    case MessageType::ThroughputReport: {
      ThroughputReportMsg m;
      m.chunk_index = r.u32();
      m.bytes_received = r.u64();
      m.recv_start_us = r.i64();
      m.recv_end_us = r.i64();
      r.expect_done();
      return m;
    }
    case MessageType::End: {
      r.expect_done();
      return EndMsg{};
    }
  }
  throw ProtocolError("unknown message type", 5);  // unreachable
}

void FrameAssembler::feed(const uint8_t* data, size_t size) {
  buffer_.insert(buffer_.end(), data, data + size);
}

std::optional<Message> FrameAssembler::next() {
  // Drop consumed prefix occasionally to keep the buffer bounded.
  if (cursor_ > 0 && cursor_ * 2 > buffer_.size()) {
    buffer_.erase(buffer_.begin(), buffer_.begin() + ptrdiff_t(cursor_));
    cursor_ = 0;
  }
  const size_t avail = buffer_.size() - cursor_;
  if (avail < kHeaderSize) return std::nullopt;
  uint32_t payload_len;
  std::memcpy(&payload_len, buffer_.data() + cursor_ + 6, 4);
  if (payload_len > kMaxPayload)
    throw ProtocolError("payload length exceeds limit", cursor_ + 6);
  const size_t frame_size = kHeaderSize + payload_len;
  if (avail < frame_size) return std::nullopt;
  Message msg = decode(buffer_.data() + cursor_, frame_size);
  cursor_ += frame_size;
  return msg;
}

}  // namespace livevv::wire
