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

#include <cmath>
#include <functional>
#include <vector>

#include "livevv/errors.hpp"

namespace livevv::vabr {

/// Weights of the QoE model
///   QoE = sum q(R_k) - lambda * sum |q(R_{k+1}) - q(R_k)| - mu_s * T_s.
/// q maps bitrate to utility and defaults to log(1 + R/R0) with R0 the
/// lowest-level bitrate; any non-decreasing mapping plugs in. The rebuffer
/// weight is an extension hook and defaults to off.
struct QoEConfig {
  double lambda = 1.0;
  double mu_startup = 1.0;
  double reference_bitrate = 1.0;  // R0 for the default q
  std::function<double(double)> quality;  // empty = default log mapping
  int window = 3;                  // N chunks the scheduler looks ahead
  double rebuffer_weight = 0.0;    // off by default

  double q(double bitrate) const {
    if (quality) return quality(bitrate);
    return std::log1p(bitrate / std::max(reference_bitrate, 1e-12));
  }
};

/// Evaluates the QoE model over chosen chunk bitrates (bits/second).
/// prev_bitrate, when non-negative, adds the variation term across the
/// boundary with the chunk preceding this window, which is what keeps
/// successive window decisions from oscillating.
double qoe(const std::vector<double>& bitrates, double startup_s, const QoEConfig& cfg,
           double prev_bitrate = -1, double rebuffer_s = 0);

}  // namespace livevv::vabr
