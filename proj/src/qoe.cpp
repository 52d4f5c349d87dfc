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

#include "livevv/qoe.hpp"

namespace livevv::vabr {

double qoe(const std::vector<double>& bitrates, double startup_s, const QoEConfig& cfg,
           double prev_bitrate, double rebuffer_s) {
  if (bitrates.empty()) throw ConfigError("qoe needs at least one chunk");
  if (cfg.lambda < 0 || cfg.mu_startup < 0) throw ConfigError("qoe weights must be non-negative");

  double quality = 0;
  for (double r : bitrates) quality += cfg.q(r);

  double variation = 0;
  if (prev_bitrate >= 0) variation += std::abs(cfg.q(bitrates.front()) - cfg.q(prev_bitrate));
  for (size_t k = 0; k + 1 < bitrates.size(); ++k) {
    variation += std::abs(cfg.q(bitrates[k + 1]) - cfg.q(bitrates[k]));
  }

  return quality - cfg.lambda * variation - cfg.mu_startup * startup_s -
         cfg.rebuffer_weight * rebuffer_s;
}

}  // namespace livevv::vabr
