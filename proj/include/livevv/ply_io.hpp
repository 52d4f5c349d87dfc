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
#include <iosfwd>
#include <string>

#include "livevv/geometry.hpp"

namespace livevv::geom {

enum class PlyFormat { BinaryLittleEndian, Ascii };

/// Writes x,y,z as float32 and red,green,blue as uint8 — the on-disk
/// interchange layout used by every tool in this project.
void write_ply(const std::filesystem::path& path, const PointCloud& cloud,
               PlyFormat format = PlyFormat::BinaryLittleEndian);
void write_ply(std::ostream& os, const PointCloud& cloud,
               PlyFormat format = PlyFormat::BinaryLittleEndian);

/// Reads ascii or binary_little_endian PLY. Positions may be float or double;
/// colors uint8 under red/green/blue (or r/g/b) names; unrecognized scalar
/// vertex properties are skipped. Missing color reads as white. Throws
/// FormatError on anything structurally wrong.
PointCloud read_ply(const std::filesystem::path& path);
PointCloud read_ply(std::istream& is, const std::string& origin = "<stream>");

}  // namespace livevv::geom
