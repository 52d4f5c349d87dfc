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

#include "livevv/octree.hpp"

#include <algorithm>

namespace livevv::reuse {

using geom::Vec3;

PointOctree::PointOctree(const std::vector<Vec3>& points) : points_(points) { build(); }

PointOctree::PointOctree(const geom::PointCloud& cloud) {
  points_.reserve(cloud.size());
  for (const auto& p : cloud.points) points_.push_back(p.pos());
  build();
}

void PointOctree::build() {
  if (points_.empty()) return;
  Vec3 lo = points_[0], hi = points_[0];
  for (const Vec3& p : points_) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  Node root;
  root.center = (lo + hi) / 2;
  // Cubical root cell; tiny floor so duplicate-point clouds still split sanely.
  root.half = std::max((hi - lo).maxCoeff() / 2, 1e-9) * 1.0000001;
  nodes_.push_back(root);
  for (uint32_t i = 0; i < points_.size(); ++i) insert(0, i, 0);
}

int PointOctree::child_slot(const Node& n, const Vec3& p) const {
  return (p.x() >= n.center.x() ? 1 : 0) | (p.y() >= n.center.y() ? 2 : 0) |
         (p.z() >= n.center.z() ? 4 : 0);
}

void PointOctree::insert(int node, uint32_t index, int depth) {
  for (;;) {
    Node& n = nodes_[node];
    if (n.leaf) {
      if (int(n.indices.size()) < kLeafCapacity || depth >= kMaxDepth) {
        n.indices.push_back(index);
        return;
      }
      split(node, depth);
      continue;  // node is now internal
    }
    const int slot = child_slot(n, points_[index]);
    if (n.children[slot] < 0) {
      Node child;
      child.half = n.half / 2;
      child.center = n.center + Vec3((slot & 1) ? child.half : -child.half,
                                     (slot & 2) ? child.half : -child.half,
                                     (slot & 4) ? child.half : -child.half);
      n.children[slot] = int32_t(nodes_.size());
      const int next = n.children[slot];
      nodes_.push_back(child);  // may invalidate n
      node = next;
    } else {
      node = n.children[slot];
    }
    ++depth;
  }
}

void PointOctree::split(int node, int depth) {
  std::vector<uint32_t> indices = std::move(nodes_[node].indices);
  nodes_[node].indices.clear();
  nodes_[node].leaf = false;
  for (uint32_t i : indices) insert(node, i, depth);
}

double PointOctree::box_dist_sq(const Node& n, const Vec3& q) {
  double sum = 0;
  for (int d = 0; d < 3; ++d) {
    const double excess = std::abs(q[d] - n.center[d]) - n.half;
    if (excess > 0) sum += excess * excess;
  }
  return sum;
}

size_t PointOctree::nearest(const Vec3& q, double* out_dist_sq) const {
  if (points_.empty()) throw EmptyCloudError("nearest-neighbor query on empty octree");
  size_t best = 0;
  double best_sq = std::numeric_limits<double>::infinity();
  search(0, q, best, best_sq);
  if (out_dist_sq) *out_dist_sq = best_sq;
  return best;
}

void PointOctree::search(int node, const Vec3& q, size_t& best, double& best_sq) const {
  const Node& n = nodes_[node];
  if (n.leaf) {
    for (uint32_t i : n.indices) {
      const double d = (points_[i] - q).squaredNorm();
      if (d < best_sq) {
        best_sq = d;
        best = i;
      }
    }
    return;
  }
  // Children ordered by distance to the query so the tightest bound forms
  // early and the remaining octants prune.
  struct Entry {
    double dist;
    int child;
  };
  Entry order[8];
  int count = 0;
  for (int c = 0; c < 8; ++c) {
    if (n.children[c] < 0) continue;
    order[count++] = {box_dist_sq(nodes_[n.children[c]], q), n.children[c]};
  }
  std::sort(order, order + count, [](const Entry& a, const Entry& b) { return a.dist < b.dist; });
  for (int i = 0; i < count; ++i) {
    if (order[i].dist >= best_sq) break;
    search(order[i].child, q, best, best_sq);
  }
}

}  // namespace livevv::reuse
