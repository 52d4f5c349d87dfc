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

#include "livevv/channel.hpp"

namespace livevv::transport {

Delivery ChannelSimulator::send(double send_s, int64_t bits) {
  if (send_s < last_send_) throw ConfigError("channel send times must be non-decreasing");
  last_send_ = send_s;

  Delivery d;
  d.send_s = send_s;
  double start = std::max(send_s, busy_until_);
  double end = start;
  int attempts = 0;
  for (;;) {
    ++attempts;
    end = model_.unlimited ? start : model_.trace.time_to_deliver(start, double(bits));
    const bool lost = model_.loss_probability > 0 && rng_.uniform() < model_.loss_probability;
    if (!lost) break;
    start = end + model_.retransmit_timeout_s;  // retransmission re-serves the bits
  }
  busy_until_ = end;
  d.attempts = attempts;
  d.service_end_s = end;
  d.arrival_s = end + model_.propagation_s;
  return d;
}

std::vector<Delivery> ChannelSimulator::simulate(
    const std::vector<std::pair<double, int64_t>>& messages) {
  std::vector<Delivery> out;
  out.reserve(messages.size());
  for (const auto& [send_s, bits] : messages) out.push_back(send(send_s, bits));
  return out;
}

}  // namespace livevv::transport
