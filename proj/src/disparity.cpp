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

#include "livevv/disparity.hpp"

#include <algorithm>

namespace livevv::reuse {

namespace {

bool clouds_identical(const geom::PointCloud& a, const geom::PointCloud& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.points.size(); ++i) {
    if (!(a.points[i] == b.points[i])) return false;
  }
  return true;
}

}  // namespace

void DisparityDetector::apply_saliency(const SaliencySnapshot& snap) {
  for (const auto& [index, stats] : snap.cells) {
    // Density from the reference when known; new cells score on dwell alone
    // once they carry points.
    double density = 0;
    auto ref = reference_.find(index);
    if (ref != reference_.end()) density = ref->second.density();
    const double sv = cfg_.saliency_scale *
                      saliency_score(density, stats.frustum_frequency, stats.distance_m);
    CellMeta& meta = meta_[index];
    meta.saliency = sv;
    meta.has_saliency = true;
    meta.level = detect_cadence(sv).level;
  }
}

DetectLevel DisparityDetector::level_of(const CellIndex& index) const {
  auto it = meta_.find(index);
  if (it == meta_.end() || !it->second.has_saliency) return cfg_.default_level;
  return it->second.level;
}

std::vector<CubeUpdate> DisparityDetector::detect(const CubeGrid& current, int64_t slot,
                                                  ThreadPool* pool) {
  if (!current.config.compatible(grid_config_)) {
    throw ConfigError("cube grid geometry does not match the detector's");
  }

  // Union of live and referenced cells, in deterministic order.
  std::vector<CellIndex> due;
  {
    std::vector<CellIndex> all;
    all.reserve(current.cells.size() + reference_.size());
    for (const auto& [index, _] : current.cells) all.push_back(index);
    for (const auto& [index, _] : reference_) all.push_back(index);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const CellIndex& index : all) {
      if (slot % detect_interval(level_of(index)) == 0) due.push_back(index);
    }
  }

  std::vector<std::optional<CubeUpdate>> slots(due.size());
  std::vector<double> chamfers(due.size(), 0.0);

  auto examine = [&](size_t i) {
    const CellIndex index = due[i];
    auto cur_it = current.cells.find(index);
    auto ref_it = reference_.find(index);
    const bool cur_has = cur_it != current.cells.end() && !cur_it->second.points.empty();
    const bool ref_has = ref_it != reference_.end() && !ref_it->second.points.empty();

    CubeUpdate update;
    update.index = index;
    update.level = level_of(index);
    auto meta = meta_.find(index);
    update.saliency = meta != meta_.end() ? meta->second.saliency : 0.0;

    if (cur_has && !ref_has) {
      // No past cube: updated directly.
      update.action = CubeUpdate::Action::Replace;
      update.points = cur_it->second.points;
      update.chamfer = 0;
      update.normalized_chamfer = 1.0;
      slots[i] = std::move(update);
    } else if (!cur_has && ref_has) {
      update.action = CubeUpdate::Action::Clear;
      update.normalized_chamfer = 1.0;
      slots[i] = std::move(update);
    } else if (cur_has && ref_has) {
      if (clouds_identical(cur_it->second.points, ref_it->second.points)) return;
      const double cd = chamfer_distance(cur_it->second.points, ref_it->second.points);
      chamfers[i] = cd;
      if (cd > cfg_.change_threshold) {
        update.action = CubeUpdate::Action::Replace;
        update.points = cur_it->second.points;
        update.chamfer = cd;
        slots[i] = std::move(update);
      }
    }
  };

  if (pool) {
    pool->parallel_for(due.size(), examine);
  } else {
    for (size_t i = 0; i < due.size(); ++i) examine(i);
  }

  // The running maximum folds in this pass before normalizing, so the
  // largest change of the pass normalizes to 1.
  for (double cd : chamfers) cd_max_ = std::max(cd_max_, cd);

  std::vector<CubeUpdate> updates;
  for (size_t i = 0; i < due.size(); ++i) {
    detection_log_.push_back({slot, due[i], chamfers[i], slots[i].has_value()});
    if (!slots[i]) continue;
    CubeUpdate& u = *slots[i];
    if (u.action == CubeUpdate::Action::Replace && u.chamfer > 0) {
      u.normalized_chamfer = u.chamfer / std::max(cd_max_, cfg_.cdmax_floor);
    }
    updates.push_back(std::move(u));
  }
  return updates;
}

void DisparityDetector::commit(const CubeUpdate& update, int64_t slot) {
  if (update.action == CubeUpdate::Action::Clear) {
    reference_.erase(update.index);
    return;
  }
  CubeCell& cell = reference_[update.index];
  cell.index = update.index;
  cell.points = update.points;
  cell.last_update_slot = slot;
  cell.last_detect_slot = slot;
  cell.saliency = update.saliency;
  cell.detect_level = update.level;
}

void apply_updates(std::unordered_map<CellIndex, geom::PointCloud, CellIndexHash>& state,
                   const std::vector<CubeUpdate>& updates) {
  for (const CubeUpdate& u : updates) {
    if (u.action == CubeUpdate::Action::Clear) {
      state.erase(u.index);
    } else {
      state[u.index] = u.points;
    }
  }
}

}  // namespace livevv::reuse
