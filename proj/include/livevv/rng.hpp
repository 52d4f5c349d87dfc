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

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace livevv {

/// SplitMix64 stream. Fully specified, so every run of the pipeline with the
/// same seed produces identical selections regardless of platform or stdlib.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(uint64_t seed) : state_(seed) {}

  static constexpr uint64_t min() { return 0; }
  static constexpr uint64_t max() { return ~0ull; }

  uint64_t operator()() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0.
  uint64_t below(uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    uint64_t threshold = (~n + 1) % n;
    for (;;) {
      uint64_t r = (*this)();
      if (r >= threshold) return r % n;
    }
  }

 private:
  uint64_t state_;
};

/// Mixes independent key components into one sub-stream seed, so that e.g.
/// (seed, slot, part) pairs get decorrelated deterministic streams.
inline uint64_t mix_seed(uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  Rng r(a ^ 0x632be59bd9b4e019ull);
  uint64_t h = r();
  h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  Rng r2(h);
  h = r2();
  h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return Rng(h)();
}

/// First k entries of a deterministic uniform permutation of [0, n)
/// (partial Fisher-Yates), returned sorted ascending.
inline std::vector<size_t> sample_indices(size_t n, size_t k, uint64_t seed) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  Rng rng(seed);
  if (k > n) k = n;
  for (size_t i = 0; i < k; ++i) {
    size_t j = i + static_cast<size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// Full deterministic permutation of [0, n).
inline std::vector<size_t> permutation(size_t n, uint64_t seed) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  Rng rng(seed);
  for (size_t i = 0; i + 1 < n; ++i) {
    size_t j = i + static_cast<size_t>(rng.below(n - i));
    std::swap(idx[i], idx[j]);
  }
  return idx;
}

}  // namespace livevv
