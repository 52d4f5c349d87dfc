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

#include "livevv/abr.hpp"

namespace livevv::vabr {

LevelDecision select_levels(const std::vector<ChunkSizeTable>& window,
                            const std::vector<int64_t>& budget_bits,
                            const std::vector<int>& current_levels, double chunk_duration_s,
                            const QoEConfig& cfg, double prev_bitrate_bps) {
  const size_t n = window.size();
  if (n == 0) throw ConfigError("select_levels needs at least one chunk");
  if (budget_bits.size() != n || current_levels.size() != n)
    throw ConfigError("window, budgets and current levels must align");
  if (chunk_duration_s <= 0) throw ConfigError("chunk duration must be positive");

  // Per-chunk candidate levels. Upgrade-only: never below the current level.
  std::vector<std::vector<int>> candidates(n);
  std::vector<bool> late(n, false);
  for (size_t k = 0; k < n; ++k) {
    const auto& bits = window[k].level_bits;
    if (bits.empty()) throw ConfigError("empty level table");
    const int max_level = int(bits.size()) - 1;
    const int cur = std::clamp(current_levels[k], 0, max_level);
    for (int level = cur; level <= max_level; ++level) {
      if (bits[level] <= budget_bits[k]) candidates[k].push_back(level);
    }
    if (candidates[k].empty()) {
      candidates[k].push_back(cur);  // mandatory emission, accounted as late
      late[k] = true;
    }
  }

  LevelDecision best;
  std::vector<size_t> pick(n, 0);
  std::vector<double> bitrates(n);
  bool have_best = false;
  for (;;) {
    int64_t total_bits = 0;
    for (size_t k = 0; k < n; ++k) {
      const int level = candidates[k][pick[k]];
      total_bits += window[k].level_bits[level];
      bitrates[k] = double(window[k].level_bits[level]) / chunk_duration_s;
    }
    // Startup delay is decided at session start, not by this window; it
    // shifts every assignment equally so it stays out of the objective.
    const double value = qoe(bitrates, 0.0, cfg, prev_bitrate_bps);
    if (!have_best || value > best.qoe_value ||
        (value == best.qoe_value && total_bits < best.total_bits)) {
      have_best = true;
      best.qoe_value = value;
      best.total_bits = total_bits;
      best.levels.resize(n);
      for (size_t k = 0; k < n; ++k) best.levels[k] = candidates[k][pick[k]];
    }
    // Next assignment in lexicographic order.
    size_t k = 0;
    while (k < n && ++pick[k] == candidates[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
  best.late = late;
  return best;
}

StaticFillResult static_budget_fill(int64_t residual_bits, const StaticChunk& chunk) {
  StaticFillResult result;
  if (residual_bits <= 0 || chunk.entries.empty()) return result;
  int64_t remaining = residual_bits - 8 * kStaticMessageOverheadBytes;
  if (remaining < 0) return result;
  const int top = int(chunk.level_wire_bits.size()) - 1;
  for (size_t i = 0; i < chunk.entries.size(); ++i) {
    const int64_t cost = chunk.entries[i].wire_bits_at_level(top);
    if (cost <= remaining) {
      result.chosen.push_back(i);
      remaining -= cost;
      result.bits_used += cost;
    }
  }
  if (!result.chosen.empty()) result.bits_used += 8 * kStaticMessageOverheadBytes;
  return result;
}

}  // namespace livevv::vabr
