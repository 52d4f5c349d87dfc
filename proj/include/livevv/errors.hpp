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
#include <stdexcept>
#include <string>

namespace livevv {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Image/buffer dimensions are inconsistent with the declared shape.
struct DimensionError : Error {
  using Error::Error;
};

/// Structured-text or script input could not be parsed.
struct ParseError : Error {
  ParseError(const std::string& what, std::string field = {}, int line = -1)
      : Error(format(what, field, line)), field(std::move(field)), line(line) {}
  std::string field;
  int line;

 private:
  static std::string format(const std::string& what, const std::string& field, int line) {
    std::string msg = what;
    if (!field.empty()) msg += " (field: " + field + ")";
    if (line >= 0) msg += " (line " + std::to_string(line) + ")";
    return msg;
  }
};

/// A binary file (e.g. PLY) is corrupt or not in a supported layout.
struct FormatError : Error {
  using Error::Error;
};

/// A frame stream failed mid-sequence; carries the source position.
struct StreamError : Error {
  StreamError(const std::string& what, int camera_id, int64_t sequence)
      : Error(what + " (camera " + std::to_string(camera_id) + ", sequence " +
              std::to_string(sequence) + ")"),
        camera_id(camera_id),
        sequence(sequence) {}
  int camera_id;
  int64_t sequence;
};

/// Too few or geometrically degenerate correspondences for alignment.
struct CalibrationDegenerateError : Error {
  using Error::Error;
};

/// A merge was requested for a camera with no stored transform.
struct NotCalibratedError : Error {
  using Error::Error;
};

/// An operation that requires points received an empty cloud.
struct EmptyCloudError : Error {
  using Error::Error;
};

/// Mismatched or invalid configuration (grid geometry, trace shape, ...).
struct ConfigError : Error {
  using Error::Error;
};

/// Wire-format violation; offset is the byte position of the fault.
struct ProtocolError : Error {
  ProtocolError(const std::string& what, size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
  size_t offset;
};

/// A report aggregation is missing required log columns.
struct ReportError : Error {
  using Error::Error;
};

}  // namespace livevv
