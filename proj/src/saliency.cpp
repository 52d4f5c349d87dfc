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

#include "livevv/saliency.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace livevv::reuse {

using geom::Vec3;

std::vector<ViewportSample> read_viewport_trace(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open viewport trace: " + path.string());
  std::vector<ViewportSample> samples;
  std::string line;
  int line_no = 0;
  int64_t prev_ts = std::numeric_limits<int64_t>::min();
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string field;
    double v[7];
    for (int i = 0; i < 7; ++i) {
      if (!std::getline(ls, field, ','))
        throw ParseError("viewport sample needs 7 comma-separated values", "", line_no);
      try {
        v[i] = std::stod(field);
      } catch (const std::exception&) {
        throw ParseError("non-numeric viewport field", field, line_no);
      }
      if (!std::isfinite(v[i])) throw ParseError("non-finite viewport field", field, line_no);
    }
    ViewportSample s;
    s.timestamp_us = int64_t(v[0]);
    if (s.timestamp_us < prev_ts)
      throw ParseError("viewport timestamps must be non-decreasing", "timestamp_us", line_no);
    prev_ts = s.timestamp_us;
    s.position = {v[1], v[2], v[3]};
    s.orientation = geom::EulerAngles(v[4], v[5], v[6]);
    samples.push_back(s);
  }
  return samples;
}

void write_viewport_trace(const std::filesystem::path& path,
                          const std::vector<ViewportSample>& samples) {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot write viewport trace: " + path.string());
  os.precision(17);
  for (const auto& s : samples) {
    os << s.timestamp_us << ',' << s.position.x() << ',' << s.position.y() << ','
       << s.position.z() << ',' << s.orientation.yaw << ',' << s.orientation.pitch << ','
       << s.orientation.roll << '\n';
  }
}

Vec3 view_vector(const ViewportSample& sample) {
  return geom::rotation_from_euler(sample.orientation).rotation * Vec3::UnitX();
}

bool in_frustum(const ViewportSample& sample, const Vec3& cube_center, double threshold_deg) {
  const Vec3 dir = cube_center - sample.position;
  const double dist = dir.norm();
  if (dist < 1e-12) return true;  // coincident: angle undefined, count it
  const double cos_angle = view_vector(sample).dot(dir) / dist;
  return cos_angle >= std::cos(threshold_deg * M_PI / 180.0);
}

double saliency_score(double density, double frustum_frequency, double distance_m) {
  return density * frustum_frequency / std::max(distance_m, 1e-3);
}

DetectCadence detect_cadence(double saliency) {
  if (saliency >= 16.0) return {1.0, 1, DetectLevel::High};
  if (saliency >= 9.0) return {0.2, 5, DetectLevel::Mid};
  return {0.1, 10, DetectLevel::Low};
}

double SaliencySnapshot::score(const CellIndex& index, double density, double scale) const {
  auto it = cells.find(index);
  if (it == cells.end() || sample_count == 0) return 0;
  return scale * saliency_score(density, it->second.frustum_frequency, it->second.distance_m);
}

void SaliencyTracker::accumulate(const ViewportSample& sample, const CubeGrid& grid) {
  SampleRecord rec;
  rec.timestamp_us = sample.timestamp_us;
  rec.position = sample.position;
  for (const auto& [index, cell] : grid.cells) {
    const Vec3 center = grid.config.cell_center(index);
    last_distance_[index] = (center - sample.position).norm();
    if (in_frustum(sample, center, cfg_.threshold_deg)) rec.hits.push_back(index);
  }
  for (const CellIndex& index : rec.hits) ++hit_counts_[index];
  window_.push_back(std::move(rec));

  const int64_t window_us = int64_t(cfg_.window_s * 1e6);
  while (!window_.empty() && window_.front().timestamp_us < sample.timestamp_us - window_us) {
    for (const CellIndex& index : window_.front().hits) {
      auto it = hit_counts_.find(index);
      if (it != hit_counts_.end() && --it->second == 0) hit_counts_.erase(it);
    }
    window_.pop_front();
  }
}

SaliencySnapshot SaliencyTracker::snapshot() const {
  SaliencySnapshot snap;
  snap.sample_count = int64_t(window_.size());
  if (snap.sample_count == 0) return snap;
  for (const auto& [index, hits] : hit_counts_) {
    SaliencySnapshot::CellStats stats;
    stats.hits = hits;
    stats.frustum_frequency = double(hits) / double(snap.sample_count);
    auto dist = last_distance_.find(index);
    stats.distance_m = dist != last_distance_.end() ? dist->second : 0.0;
    snap.cells[index] = stats;
  }
  return snap;
}

void write_saliency_heatmap(const std::filesystem::path& path, const CubeGrid& grid,
                            const SaliencySnapshot& snap, double scale) {
  std::ofstream os(path);
  if (!os) throw FormatError("cannot write heatmap: " + path.string());
  os << "ix,iy,iz,saliency,level\n";
  for (const auto& [index, cell] : grid.cells) {
    const double sv = snap.score(index, cell.density(), scale);
    const DetectCadence cadence = detect_cadence(sv);
    os << index.x << ',' << index.y << ',' << index.z << ',' << sv << ','
       << (cadence.level == DetectLevel::High ? "high"
                                              : cadence.level == DetectLevel::Mid ? "mid" : "low")
       << '\n';
  }
}

}  // namespace livevv::reuse
