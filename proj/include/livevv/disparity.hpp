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

#include <map>
#include <vector>

#include "livevv/chamfer.hpp"
#include "livevv/cube_grid.hpp"
#include "livevv/saliency.hpp"
#include "livevv/thread_pool.hpp"

namespace livevv::reuse {

/// One scheduled change to a client-side cube.
struct CubeUpdate {
  enum class Action : uint8_t { Replace = 0, Clear = 1 };

  CellIndex index;
  Action action = Action::Replace;
  geom::PointCloud points;        // full current contents for Replace; empty for Clear
  double quality_fraction = 1.0;  // fraction of the points actually shipped
  double chamfer = 0;             // raw C_d against the reference (0 for new cells)
  double normalized_chamfer = 1;  // C_d / C_dmax, in [0,1]
  double saliency = 0;            // S_v at detection time
  DetectLevel level = DetectLevel::High;
};

struct DisparityConfig {
  double change_threshold = 0.01;  // meters of C_d; 0 = lossless mode
  double cdmax_floor = 1e-6;       // running-max divide-by-zero guard
  DetectLevel default_level = DetectLevel::High;  // before any viewport data
  double saliency_scale = 1.0;
};

/// Octree-accelerated cube-level change detection against the last state the
/// client is known to hold.
///
/// Each cell is examined on its own cadence (every 1/5/10 slots by saliency
/// tier). A cell with no reference is updated directly; a referenced cell
/// that emptied is cleared; otherwise the Chamfer distance decides, against
/// the configured threshold. Emitted updates are candidates: only commit()
/// advances the reference, so deferred cubes are re-detected later.
class DisparityDetector {
 public:
  DisparityDetector(CubeGridConfig grid_config, DisparityConfig cfg)
      : grid_config_(grid_config), cfg_(cfg) {}

  /// Refreshes per-cell saliency scores and detection tiers.
  void apply_saliency(const SaliencySnapshot& snap);

  /// Runs detection for every cell due at this slot. Chamfer work fans out
  /// over the pool when one is given.
  std::vector<CubeUpdate> detect(const CubeGrid& current, int64_t slot,
                                 ThreadPool* pool = nullptr);

  /// Marks an update as delivered: the reference takes the shipped points.
  void commit(const CubeUpdate& update, int64_t slot);

  /// Reference (client-side) state.
  const std::unordered_map<CellIndex, CubeCell, CellIndexHash>& reference() const {
    return reference_;
  }
  const CubeGridConfig& grid_config() const { return grid_config_; }
  const DisparityConfig& config() const { return cfg_; }
  double running_cd_max() const { return cd_max_; }

  struct DetectionEvent {
    int64_t slot;
    CellIndex index;
    double chamfer;
    bool emitted;
  };
  const std::vector<DetectionEvent>& detection_log() const { return detection_log_; }
  void clear_detection_log() { detection_log_.clear(); }

 private:
  struct CellMeta {
    DetectLevel level;
    double saliency = 0;
    bool has_saliency = false;
  };

  DetectLevel level_of(const CellIndex& index) const;

  CubeGridConfig grid_config_;
  DisparityConfig cfg_;
  std::unordered_map<CellIndex, CubeCell, CellIndexHash> reference_;
  std::map<CellIndex, CellMeta> meta_;
  double cd_max_ = 0;
  std::vector<DetectionEvent> detection_log_;
};

/// Applies an update stream to a grid-shaped state (the client does exactly
/// this). Throws ConfigError if the grid configs disagree.
void apply_updates(std::unordered_map<CellIndex, geom::PointCloud, CellIndexHash>& state,
                   const std::vector<CubeUpdate>& updates);

}  // namespace livevv::reuse
