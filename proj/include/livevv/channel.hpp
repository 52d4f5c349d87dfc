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

#include "livevv/bandwidth.hpp"
#include "livevv/rng.hpp"

namespace livevv::transport {

/// Reliable, ordered, trace-shaped channel. Messages queue FIFO behind a
/// fluid server whose service rate follows the bandwidth trace; loss shows
/// up as retransmission delay (the bits are served again after an RTO), not
/// as missing data.
struct ChannelModel {
  vabr::BandwidthTrace trace;      // empty/unlimited flag = infinite rate
  bool unlimited = false;
  double propagation_s = 0.020;    // one-way
  double loss_probability = 0;     // per transmission attempt
  double retransmit_timeout_s = 0.05;
  uint64_t seed = 1;

  static ChannelModel infinite(double propagation_s = 0.0) {
    ChannelModel m;
    m.unlimited = true;
    m.propagation_s = propagation_s;
    return m;
  }
};

struct Delivery {
  double send_s = 0;
  double service_end_s = 0;  // last bit leaves the sender
  double arrival_s = 0;      // service_end + propagation
  int attempts = 1;
};

/// Simulates FIFO delivery of sized messages. Send times must be
/// non-decreasing. Queueing starts at the later of the send time and the
/// previous message's service completion.
class ChannelSimulator {
 public:
  explicit ChannelSimulator(ChannelModel model) : model_(std::move(model)), rng_(model_.seed) {}

  Delivery send(double send_s, int64_t bits);

  /// Batch convenience over (send time, bits) pairs.
  std::vector<Delivery> simulate(const std::vector<std::pair<double, int64_t>>& messages);

  double busy_until() const { return busy_until_; }

 private:
  ChannelModel model_;
  Rng rng_;
  double busy_until_ = 0;
  double last_send_ = -std::numeric_limits<double>::infinity();
};

}  // namespace livevv::transport
