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

#include "livevv/geometry.hpp"

#include <cmath>

namespace livevv::geom {

namespace {

double wrap_angle(double a) {
  // Wrap to (-pi, pi].
  a = std::fmod(a, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

}  // namespace

EulerAngles::EulerAngles(double yaw_, double pitch_, double roll_)
    : yaw(wrap_angle(yaw_)), pitch(wrap_angle(pitch_)), roll(wrap_angle(roll_)) {
  if (!std::isfinite(yaw_) || !std::isfinite(pitch_) || !std::isfinite(roll_)) {
    throw ConfigError("euler angles must be finite");
  }
}

bool RigidTransform::is_rigid(double tol) const {
  Mat3 should_be_identity = rotation.transpose() * rotation;
  if ((should_be_identity - Mat3::Identity()).cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(rotation.determinant() - 1.0) <= tol;
}

PointCloud rgbd_to_pointcloud(const DepthImage& depth, const CameraIntrinsics& intr) {
  if (!intr.valid()) throw ConfigError("invalid camera intrinsics");
  const size_t expected = size_t(depth.width) * size_t(depth.height);
  if (depth.width < 0 || depth.height < 0 || depth.depth.size() != expected) {
    throw DimensionError("depth buffer size does not match width*height");
  }
  if (!depth.color.empty() && depth.color.size() != expected) {
    throw DimensionError("color buffer size does not match width*height");
  }

  PointCloud out;
  out.frame = Frame::CameraLocal;
  out.points.reserve(expected);
  const bool has_color = !depth.color.empty();
  for (int i = 0; i < depth.height; ++i) {
    for (int j = 0; j < depth.width; ++j) {
      const uint16_t s = depth.at(i, j);
      if (s == 0) continue;  // no measurement
      Point p;
      p.z = intr.depth_scale * double(s);
      p.x = (double(j) - intr.px) * p.z / intr.fx;
      p.y = (double(i) - intr.py) * p.z / intr.fy;
      if (has_color) {
        const auto& c = depth.color[size_t(i) * depth.width + j];
        p.r = c[0];
        p.g = c[1];
        p.b = c[2];
      }
      out.points.push_back(p);
    }
  }
  return out;
}

RigidTransform rotation_from_euler(const EulerAngles& angles) {
  const double ca = std::cos(angles.yaw), sa = std::sin(angles.yaw);
  const double cb = std::cos(angles.pitch), sb = std::sin(angles.pitch);
  const double cg = std::cos(angles.roll), sg = std::sin(angles.roll);

  Mat3 yaw;  // about z
  yaw << ca, -sa, 0,
         sa,  ca, 0,
          0,   0, 1;
  Mat3 pitch;  // about y
  pitch << cb, 0, sb,
            0, 1,  0,
          -sb, 0, cb;
  Mat3 roll;  // about x
  roll << 1,  0,   0,
          0, cg, -sg,
          0, sg,  cg;

  return {roll * pitch * yaw, Vec3::Zero()};
}

RigidTransform estimate_rigid_transform(const std::vector<Vec3>& source,
                                        const std::vector<Vec3>& target,
                                        const std::vector<double>& weights) {
  if (source.size() != target.size() || source.size() != weights.size()) {
    throw CalibrationDegenerateError("correspondence lists must have equal length");
  }
  double wsum = 0;
  size_t usable = 0;
  for (double w : weights) {
    if (w < 0) throw CalibrationDegenerateError("negative weight");
    if (w > 0) ++usable;
    wsum += w;
  }
  if (usable < 3 || wsum <= 0) {
    throw CalibrationDegenerateError("need at least 3 positively weighted correspondences");
  }

  Vec3 src_centroid = Vec3::Zero(), dst_centroid = Vec3::Zero();
  for (size_t i = 0; i < source.size(); ++i) {
    src_centroid += weights[i] * source[i];
    dst_centroid += weights[i] * target[i];
  }
  src_centroid /= wsum;
  dst_centroid /= wsum;

  Mat3 cross = Mat3::Zero();
  for (size_t i = 0; i < source.size(); ++i) {
    cross += weights[i] * (target[i] - dst_centroid) * (source[i] - src_centroid).transpose();
  }

  Eigen::JacobiSVD<Mat3> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vec3 sigma = svd.singularValues();
  // Collinear (or coincident) source points leave rotation about the line
  // unconstrained: the covariance loses rank.
  if (sigma(1) <= 1e-12 * std::max(sigma(0), 1e-300)) {
    throw CalibrationDegenerateError("degenerate (collinear) correspondence configuration");
  }

  Mat3 u = svd.matrixU(), v = svd.matrixV();
  Mat3 d = Mat3::Identity();
  d(2, 2) = (u * v.transpose()).determinant() < 0 ? -1.0 : 1.0;
  Mat3 rotation = u * d * v.transpose();
  Vec3 translation = dst_centroid - rotation * src_centroid;
  return {rotation, translation};
}

PointCloud apply_transform(const PointCloud& cloud, const RigidTransform& t) {
  PointCloud out = cloud;
  apply_transform_in_place(out, t);
  return out;
}

void apply_transform_in_place(PointCloud& cloud, const RigidTransform& t) {
  for (Point& p : cloud.points) p.set_pos(t.apply(p.pos()));
}

void quantize_to_wire_precision(PointCloud& cloud) {
  for (Point& p : cloud.points) {
    p.x = float_quantize(p.x);
    p.y = float_quantize(p.y);
    p.z = float_quantize(p.z);
  }
}

}  // namespace livevv::geom
