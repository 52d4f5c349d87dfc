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

#include <vector>

#include "livevv/geometry.hpp"

namespace livevv::reuse {

/// Recursive 8-way subdivision over a point set for exact nearest-neighbor
/// queries. Queries prune subtrees whose bounding cube cannot beat the best
/// distance found so far, so results equal a brute-force scan exactly —
/// the structure only accelerates, never approximates.
class PointOctree {
 public:
  static constexpr int kLeafCapacity = 16;
  static constexpr int kMaxDepth = 10;

  explicit PointOctree(const std::vector<geom::Vec3>& points);
  explicit PointOctree(const geom::PointCloud& cloud);

  size_t size() const { return points_.size(); }

  /// Index of the stored point nearest to q, with the squared distance in
  /// out_dist_sq. Requires a non-empty tree (EmptyCloudError otherwise).
  size_t nearest(const geom::Vec3& q, double* out_dist_sq = nullptr) const;

  const geom::Vec3& point(size_t i) const { return points_[i]; }

 private:
  struct Node {
    geom::Vec3 center;
    double half = 0;
    int32_t children[8] = {-1, -1, -1, -1, -1, -1, -1, -1};
    std::vector<uint32_t> indices;  // leaf payload
    bool leaf = true;
  };

  void build();
  void insert(int node, uint32_t index, int depth);
  void split(int node, int depth);
  void search(int node, const geom::Vec3& q, size_t& best, double& best_sq) const;
  static double box_dist_sq(const Node& n, const geom::Vec3& q);
  int child_slot(const Node& n, const geom::Vec3& p) const;

  std::vector<geom::Vec3> points_;
  std::vector<Node> nodes_;
};

}  // namespace livevv::reuse
