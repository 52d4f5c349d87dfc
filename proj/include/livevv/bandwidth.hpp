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

#include <deque>
#include <filesystem>
#include <vector>

#include "livevv/errors.hpp"

namespace livevv::vabr {

/// Piecewise-linear available-bandwidth curve. Before the first point the
/// first rate holds; after the last point the last rate holds.
class BandwidthTrace {
 public:
  struct Sample {
    double time_s;
    double mbps;
  };

  BandwidthTrace() = default;
  explicit BandwidthTrace(std::vector<Sample> samples);

  /// Flat trace at the given rate.
  static BandwidthTrace constant(double mbps);

  /// Two-column CSV: time_s,mbps. '#' comments allowed.
  static BandwidthTrace from_csv(const std::filesystem::path& path);
  void to_csv(const std::filesystem::path& path) const;

  bool empty() const { return samples_.empty(); }
  const std::vector<Sample>& samples() const { return samples_; }

  /// Rate in bits/second at time t.
  double rate_bps(double t_s) const;

  /// Bits deliverable over [t0, t1].
  double integrate_bits(double t0_s, double t1_s) const;

  /// Earliest time at which `bits` have been served starting at start_s.
  /// Throws ConfigError when the trace can never deliver that much.
  double time_to_deliver(double start_s, double bits) const;

 private:
  std::vector<Sample> samples_;
};

/// Harmonic mean of the last few per-chunk delivery throughputs — robust to
/// the occasional stall, like classic rate-based ABR estimators.
class BandwidthEstimator {
 public:
  explicit BandwidthEstimator(double initial_bps = 100e6, size_t window = 5)
      : initial_bps_(initial_bps), window_(window) {}

  void add_sample(double bits, double seconds) {
    if (seconds <= 0 || bits <= 0) return;
    samples_.push_back(bits / seconds);
    if (samples_.size() > window_) samples_.pop_front();
  }

  double estimate_bps() const {
    if (samples_.empty()) return initial_bps_;
    double inv = 0;
    for (double s : samples_) inv += 1.0 / s;
    return double(samples_.size()) / inv;
  }

 private:
  double initial_bps_;
  size_t window_;
  std::deque<double> samples_;
};

}  // namespace livevv::vabr
