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

#include "livevv/chamfer.hpp"

#include <cmath>

namespace livevv::reuse {

double chamfer_distance(const geom::PointCloud& p, const geom::PointCloud& q) {
  if (p.empty() || q.empty()) throw EmptyCloudError("chamfer distance needs non-empty clouds");
  PointOctree p_tree(p), q_tree(q);
  return chamfer_distance(p, q_tree, q, p_tree);
}

double chamfer_distance(const geom::PointCloud& p, const PointOctree& q_tree,
                        const geom::PointCloud& q, const PointOctree& p_tree) {
  if (p.empty() || q.empty()) throw EmptyCloudError("chamfer distance needs non-empty clouds");
  double sum_pq = 0;
  for (const auto& pt : p.points) {
    double d_sq = 0;
    q_tree.nearest(pt.pos(), &d_sq);
    sum_pq += std::sqrt(d_sq);
  }
  double sum_qp = 0;
  for (const auto& pt : q.points) {
    double d_sq = 0;
    p_tree.nearest(pt.pos(), &d_sq);
    sum_qp += std::sqrt(d_sq);
  }
  return sum_pq / double(p.size()) + sum_qp / double(q.size());
}

}  // namespace livevv::reuse
