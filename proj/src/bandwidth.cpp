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

#include "livevv/bandwidth.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace livevv::vabr {

BandwidthTrace::BandwidthTrace(std::vector<Sample> samples) : samples_(std::move(samples)) {
  double prev = -std::numeric_limits<double>::infinity();
  for (const auto& s : samples_) {
    if (!std::isfinite(s.time_s) || !std::isfinite(s.mbps))
      throw ConfigError("bandwidth trace values must be finite");
    if (s.time_s <= prev) throw ConfigError("bandwidth trace times must be strictly increasing");
    if (s.mbps < 0) throw ConfigError("bandwidth must be non-negative");
    prev = s.time_s;
  }
}

BandwidthTrace BandwidthTrace::constant(double mbps) {
  return BandwidthTrace({{0.0, mbps}});
}

BandwidthTrace BandwidthTrace::from_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open bandwidth trace: " + path.string());
  std::vector<Sample> samples;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string t, b;
    if (!std::getline(ls, t, ',') || !std::getline(ls, b, ','))
      throw ParseError("bandwidth row needs time_s,mbps", "", line_no);
    try {
      samples.push_back({std::stod(t), std::stod(b)});
    } catch (const std::exception&) {
      throw ParseError("non-numeric bandwidth row", "", line_no);
    }
  }
  try {
    return BandwidthTrace(std::move(samples));
  } catch (const ConfigError& e) {
    throw ParseError(std::string(e.what()) + " in " + path.string());
  }
}

void BandwidthTrace::to_csv(const std::filesystem::path& path) const {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot write bandwidth trace: " + path.string());
  os.precision(17);
  for (const auto& s : samples_) os << s.time_s << ',' << s.mbps << '\n';
}

double BandwidthTrace::rate_bps(double t_s) const {
  if (samples_.empty()) throw ConfigError("empty bandwidth trace");
  if (t_s <= samples_.front().time_s) return samples_.front().mbps * 1e6;
  if (t_s >= samples_.back().time_s) return samples_.back().mbps * 1e6;
  for (size_t i = 0; i + 1 < samples_.size(); ++i) {
    if (t_s <= samples_[i + 1].time_s) {
      const double span = samples_[i + 1].time_s - samples_[i].time_s;
      const double a = (t_s - samples_[i].time_s) / span;
      return ((1 - a) * samples_[i].mbps + a * samples_[i + 1].mbps) * 1e6;
    }
  }
  return samples_.back().mbps * 1e6;
}

double BandwidthTrace::integrate_bits(double t0_s, double t1_s) const {
  if (t1_s <= t0_s) return 0;
  // Trapezoid over the piecewise-linear rate: exact.
  double bits = 0;
  double t = t0_s;
  size_t i = 0;
  while (i < samples_.size() && samples_[i].time_s <= t) ++i;
  while (t < t1_s) {
    const double seg_end = i < samples_.size() ? std::min(samples_[i].time_s, t1_s) : t1_s;
    bits += 0.5 * (rate_bps(t) + rate_bps(seg_end)) * (seg_end - t);
    t = seg_end;
    ++i;
  }
  return bits;
}

double BandwidthTrace::time_to_deliver(double start_s, double bits) const {
  if (bits <= 0) return start_s;
  double t = start_s;
  double remaining = bits;
  size_t i = 0;
  while (i < samples_.size() && samples_[i].time_s <= t) ++i;
  for (;;) {
    const bool tail = i >= samples_.size();
    const double seg_end = tail ? std::numeric_limits<double>::infinity() : samples_[i].time_s;
    const double r0 = rate_bps(t);
    if (tail) {
      if (r0 <= 0) throw ConfigError("bandwidth trace ends at zero rate; message undeliverable");
      return t + remaining / r0;
    }
    const double dt = seg_end - t;
    const double r1 = rate_bps(seg_end);
    const double seg_bits = 0.5 * (r0 + r1) * dt;
    if (seg_bits >= remaining && seg_bits > 0) {
      // Solve 0.5*slope*x^2 + r0*x = remaining within this segment.
      const double slope = (r1 - r0) / dt;
      if (std::abs(slope) < 1e-9) return t + remaining / std::max(r0, 1e-12);
      const double disc = r0 * r0 + 2 * slope * remaining;
      const double x = (-r0 + std::sqrt(std::max(disc, 0.0))) / slope;
      return t + std::clamp(x, 0.0, dt);
    }
    remaining -= seg_bits;
    t = seg_end;
    ++i;
  }
}

}  // namespace livevv::vabr
