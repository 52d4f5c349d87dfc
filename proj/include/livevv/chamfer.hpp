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

#include "livevv/geometry.hpp"
#include "livevv/octree.hpp"

namespace livevv::reuse {

/// Symmetric Chamfer distance
///   C_d(P,Q) = (1/|P|) sum_p min_q |p-q| + (1/|Q|) sum_q min_p |q-p|
/// with nearest neighbors resolved through octree traversal. Exact — the
/// octree prunes, it never approximates. Throws EmptyCloudError when either
/// cloud is empty (callers special-case empty cells).
double chamfer_distance(const geom::PointCloud& p, const geom::PointCloud& q);

/// Variant reusing prebuilt octrees when one side stays fixed across calls.
double chamfer_distance(const geom::PointCloud& p, const PointOctree& q_tree,
                        const geom::PointCloud& q, const PointOctree& p_tree);

}  // namespace livevv::reuse
