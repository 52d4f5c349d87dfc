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

#include "livevv/chunks.hpp"
#include "livevv/qoe.hpp"

namespace livevv::vabr {

/// Per-chunk dynamic payload sizes, cumulative by level (ascending).
struct ChunkSizeTable {
  std::vector<int64_t> level_bits;
};

struct LevelDecision {
  std::vector<int> levels;
  std::vector<bool> late;  // even the forced level exceeded the budget
  double qoe_value = 0;
  int64_t total_bits = 0;
};

/// Windowed quality-level search. For each chunk the candidate range is
/// [current level, max]: layers only ever upgrade. A level is feasible when
/// its bits fit that chunk's budget; when not even the current level fits,
/// the chunk is pinned there and flagged late. All candidate assignments are
/// enumerated and scored with the QoE model (bitrate = bits / duration);
/// exact QoE ties go to the assignment shipping fewer bits.
LevelDecision select_levels(const std::vector<ChunkSizeTable>& window,
                            const std::vector<int64_t>& budget_bits,
                            const std::vector<int>& current_levels, double chunk_duration_s,
                            const QoEConfig& cfg, double prev_bitrate_bps = -1);

struct StaticFillResult {
  std::vector<size_t> chosen;  // indices into StaticChunk::entries
  int64_t bits_used = 0;       // wire bits including the message overhead
};

/// Greedy saliency-ordered packing of cube updates into the residual static
/// budget (what remains of the chunk budget after the dynamic payload).
/// Entries are costed at their top-level wire size; entries that do not fit
/// are skipped (deferred to their next detection) while later smaller ones
/// may still be taken.
StaticFillResult static_budget_fill(int64_t residual_bits, const StaticChunk& chunk);

}  // namespace livevv::vabr
