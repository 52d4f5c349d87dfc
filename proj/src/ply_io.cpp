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

#include "livevv/ply_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace livevv::geom {

namespace {

size_t scalar_size(const std::string& type) {
  if (type == "char" || type == "uchar" || type == "int8" || type == "uint8") return 1;
  if (type == "short" || type == "ushort" || type == "int16" || type == "uint16") return 2;
  if (type == "int" || type == "uint" || type == "int32" || type == "uint32" || type == "float" ||
      type == "float32")
    return 4;
  if (type == "double" || type == "float64") return 8;
  return 0;
}

struct VertexProperty {
  std::string name;
  std::string type;
  size_t offset = 0;  // byte offset within a binary vertex record
  int column = 0;     // token index within an ascii vertex line
};

struct PlyHeader {
  PlyFormat format = PlyFormat::BinaryLittleEndian;
  size_t vertex_count = 0;
  std::vector<VertexProperty> props;
  size_t vertex_stride = 0;
};

PlyHeader parse_header(std::istream& is, const std::string& origin) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError(origin + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "ply") throw FormatError(origin + ": missing 'ply' magic");

  PlyHeader header;
  bool have_format = false;
  bool in_vertex_element = false;
  bool seen_vertex_element = false;
  int column = 0;

  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "comment" || keyword == "obj_info" || keyword.empty()) continue;
    if (keyword == "format") {
      std::string fmt, version;
      ls >> fmt >> version;
      if (fmt == "binary_little_endian") {
        header.format = PlyFormat::BinaryLittleEndian;
      } else if (fmt == "ascii") {
        header.format = PlyFormat::Ascii;
      } else {
        throw FormatError(origin + ": unsupported format '" + fmt + "'");
      }
      have_format = true;
    } else if (keyword == "element") {
      std::string name;
      size_t count = 0;
      ls >> name >> count;
      if (name == "vertex") {
        if (seen_vertex_element) throw FormatError(origin + ": duplicate vertex element");
        header.vertex_count = count;
        in_vertex_element = true;
        seen_vertex_element = true;
      } else {
        // Anything after the vertices (faces etc.) is ignored, but the
        // vertex element must come first for that to be safe.
        if (!seen_vertex_element)
          throw FormatError(origin + ": vertex element must precede other elements");
        in_vertex_element = false;
      }
    } else if (keyword == "property") {
      if (!in_vertex_element) continue;
      std::string type;
      ls >> type;
      if (type == "list") throw FormatError(origin + ": list properties unsupported on vertices");
      VertexProperty prop;
      prop.type = type;
      ls >> prop.name;
      size_t sz = scalar_size(type);
      if (sz == 0) throw FormatError(origin + ": unknown property type '" + type + "'");
      prop.offset = header.vertex_stride;
      prop.column = column++;
      header.vertex_stride += sz;
      header.props.push_back(prop);
    } else if (keyword == "end_header") {
      if (!have_format) throw FormatError(origin + ": missing format line");
      if (!seen_vertex_element) throw FormatError(origin + ": missing vertex element");
      return header;
    } else {
      throw FormatError(origin + ": unknown header keyword '" + keyword + "'");
    }
  }
  throw FormatError(origin + ": unterminated header");
}

double decode_scalar(const char* bytes, const std::string& type) {
  if (type == "float" || type == "float32") {
    float v;
    std::memcpy(&v, bytes, 4);
    return v;
  }
  if (type == "double" || type == "float64") {
    double v;
    std::memcpy(&v, bytes, 8);
    return v;
  }
  if (type == "uchar" || type == "uint8") return *reinterpret_cast<const uint8_t*>(bytes);
  if (type == "char" || type == "int8") return *reinterpret_cast<const int8_t*>(bytes);
  if (type == "ushort" || type == "uint16") {
    uint16_t v;
    std::memcpy(&v, bytes, 2);
    return v;
  }
  if (type == "short" || type == "int16") {
    int16_t v;
    std::memcpy(&v, bytes, 2);
    return v;
  }
  if (type == "uint" || type == "uint32") {
    uint32_t v;
    std::memcpy(&v, bytes, 4);
    return v;
  }
  int32_t v;
  std::memcpy(&v, bytes, 4);
  return v;
}

struct FieldMap {
  int x = -1, y = -1, z = -1, r = -1, g = -1, b = -1;
};

FieldMap map_fields(const PlyHeader& header, const std::string& origin) {
  FieldMap map;
  for (int i = 0; i < int(header.props.size()); ++i) {
    const std::string& n = header.props[i].name;
    if (n == "x") map.x = i;
    else if (n == "y") map.y = i;
    else if (n == "z") map.z = i;
    else if (n == "red" || n == "r") map.r = i;
    else if (n == "green" || n == "g") map.g = i;
    else if (n == "blue" || n == "b") map.b = i;
  }
  if (map.x < 0 || map.y < 0 || map.z < 0) {
    throw FormatError(origin + ": vertex element lacks x/y/z properties");
  }
  return map;
}

}  // namespace

void write_ply(const std::filesystem::path& path, const PointCloud& cloud, PlyFormat format) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw FormatError("cannot open for writing: " + path.string());
  write_ply(os, cloud, format);
  if (!os) throw FormatError("write failed: " + path.string());
}

void write_ply(std::ostream& os, const PointCloud& cloud, PlyFormat format) {
  os << "ply\n";
  os << (format == PlyFormat::Ascii ? "format ascii 1.0\n" : "format binary_little_endian 1.0\n");
  os << "element vertex " << cloud.size() << "\n";
  os << "property float x\nproperty float y\nproperty float z\n";
  os << "property uchar red\nproperty uchar green\nproperty uchar blue\n";
  os << "end_header\n";

  if (format == PlyFormat::Ascii) {
    for (const Point& p : cloud.points) {
      os << float(p.x) << ' ' << float(p.y) << ' ' << float(p.z) << ' ' << int(p.r) << ' '
         << int(p.g) << ' ' << int(p.b) << '\n';
    }
    return;
  }
  // This code assumes a little-endian host, like everything else that touches
  // the wire format.
  std::vector<char> record(15);
  for (const Point& p : cloud.points) {
    float xyz[3] = {float(p.x), float(p.y), float(p.z)};
    std::memcpy(record.data(), xyz, 12);
    record[12] = char(p.r);
    record[13] = char(p.g);
    record[14] = char(p.b);
    os.write(record.data(), 15);
  }
}

PointCloud read_ply(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw FormatError("cannot open: " + path.string());
  return read_ply(is, path.string());
}

PointCloud read_ply(std::istream& is, const std::string& origin) {
  PlyHeader header = parse_header(is, origin);
  FieldMap fields = map_fields(header, origin);

  PointCloud cloud;
  cloud.points.resize(header.vertex_count);

  auto clamp_color = [](double v) -> uint8_t {
    if (v < 0) return 0;
    if (v > 255) return 255;
    return uint8_t(v + 0.5);
  };

  if (header.format == PlyFormat::Ascii) {
    std::string line;
    for (size_t i = 0; i < header.vertex_count; ++i) {
      if (!std::getline(is, line)) throw FormatError(origin + ": truncated vertex data");
      std::istringstream ls(line);
      std::vector<double> values(header.props.size());
      for (double& v : values) {
        if (!(ls >> v)) throw FormatError(origin + ": short vertex line");
      }
      Point& p = cloud.points[i];
      p.x = values[fields.x];
      p.y = values[fields.y];
      p.z = values[fields.z];
      if (fields.r >= 0) p.r = clamp_color(values[fields.r]);
      if (fields.g >= 0) p.g = clamp_color(values[fields.g]);
      if (fields.b >= 0) p.b = clamp_color(values[fields.b]);
    }
    return cloud;
  }

  std::vector<char> record(header.vertex_stride);
  for (size_t i = 0; i < header.vertex_count; ++i) {
    is.read(record.data(), std::streamsize(record.size()));
    if (size_t(is.gcount()) != record.size())
      throw FormatError(origin + ": truncated vertex data");
    Point& p = cloud.points[i];
    auto value = [&](int prop) {
      return decode_scalar(record.data() + header.props[prop].offset, header.props[prop].type);
    };
    p.x = value(fields.x);
    p.y = value(fields.y);
    p.z = value(fields.z);
    if (fields.r >= 0) p.r = clamp_color(value(fields.r));
    if (fields.g >= 0) p.g = clamp_color(value(fields.g));
    if (fields.b >= 0) p.b = clamp_color(value(fields.b));
  }
  return cloud;
}

}  // namespace livevv::geom
