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

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "livevv/errors.hpp"

namespace livevv::geom {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// One colored point, meters. Coordinates are doubles internally; the wire
/// and PLY interchange formats quantize to float32.
struct Point {
  double x = 0, y = 0, z = 0;
  uint8_t r = 255, g = 255, b = 255;

  Vec3 pos() const { return {x, y, z}; }
  void set_pos(const Vec3& p) {
    x = p.x();
    y = p.y();
    z = p.z();
  }
  bool operator==(const Point&) const = default;
};

enum class Frame : uint8_t { World, CameraLocal };

/// Unordered set of colored points; storage order carries no meaning.
struct PointCloud {
  std::vector<Point> points;
  Frame frame = Frame::World;

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  void append(const PointCloud& other) {
    points.insert(points.end(), other.points.begin(), other.points.end());
  }
};

/// Pinhole model. depth_scale converts raw sensor units to meters (z = D*S).
struct CameraIntrinsics {
  double fx = 1, fy = 1;  // focal lengths, pixels
  double px = 0, py = 0;  // principal point, pixels
  double depth_scale = 1; // meters per raw depth unit

  bool valid() const { return fx > 0 && fy > 0 && depth_scale > 0; }
};

/// Row-major raw depth frame. Depth 0 means "no measurement". Color, when
/// present, is pre-aligned to the depth grid.
struct DepthImage {
  int width = 0, height = 0;
  std::vector<uint16_t> depth;               // width*height values
  std::vector<std::array<uint8_t, 3>> color; // empty or width*height values

  uint16_t at(int row, int col) const { return depth[size_t(row) * width + col]; }
};

/// Yaw/pitch/roll in radians. Values are wrapped to (-pi, pi] on construction.
struct EulerAngles {
  double yaw = 0, pitch = 0, roll = 0;

  EulerAngles() = default;
  EulerAngles(double yaw_, double pitch_, double roll_);
};

/// Rotation (proper orthogonal 3x3) plus translation, applied as R*p + t.
/// Matrices are row-major in serialized form; points are column vectors.
struct RigidTransform {
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  Vec3 apply(const Vec3& p) const { return rotation * p + translation; }

  RigidTransform inverse() const {
    return {rotation.transpose(), -(rotation.transpose() * translation)};
  }

  /// this ∘ other: apply `other` first, then this.
  RigidTransform compose(const RigidTransform& other) const {
    return {rotation * other.rotation, rotation * other.translation + translation};
  }

  Eigen::Matrix4d as_matrix4() const {
    Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
    m.block<3, 3>(0, 0) = rotation;
    m.block<3, 1>(0, 3) = translation;
    return m;
  }

  /// True when the rotation block is proper orthogonal within tol.
  bool is_rigid(double tol = 1e-9) const;
};

/// Back-projects every nonzero-depth pixel through the pinhole model:
///   z = D*S,  x = (j - px) * z / fx,  y = (i - py) * z / fy.
/// Pixels without aligned color come out white. The returned cloud is
/// camera-local. Throws DimensionError when buffer sizes disagree with the
/// declared width/height, ConfigError for invalid intrinsics.
PointCloud rgbd_to_pointcloud(const DepthImage& depth, const CameraIntrinsics& intr);

/// Proper rotation composed as roll * pitch * yaw (roll about x, pitch about
/// y, yaw about z), each factor the standard right-handed block.
RigidTransform rotation_from_euler(const EulerAngles& angles);

/// Weighted least-squares rigid alignment (Kabsch): finds R, t minimizing
/// sum_i w_i |R*src_i + t - dst_i|^2. Throws CalibrationDegenerateError when
/// fewer than 3 correspondences carry positive weight or the weighted point
/// set is collinear.
RigidTransform estimate_rigid_transform(const std::vector<Vec3>& source,
                                        const std::vector<Vec3>& target,
                                        const std::vector<double>& weights);

/// Rotates then translates every point; colors and count are preserved.
PointCloud apply_transform(const PointCloud& cloud, const RigidTransform& t);
void apply_transform_in_place(PointCloud& cloud, const RigidTransform& t);

/// Clamps every coordinate to the nearest float32-representable value. The
/// wire format and PLY store float32; running the fused stream through this
/// once makes all downstream point-set comparisons exact.
void quantize_to_wire_precision(PointCloud& cloud);

inline double float_quantize(double v) { return static_cast<double>(static_cast<float>(v)); }

}  // namespace livevv::geom
