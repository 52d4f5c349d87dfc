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

#include <atomic>
#include <condition_variable>
#include <deque>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace livevv {

/// Fixed-size worker pool. Work items must not throw; stage code catches and
/// reports its own errors. Output ordering is the caller's responsibility:
/// parallel_for writes results by index, so reductions stay deterministic.
class ThreadPool {
 public:
  explicit ThreadPool(unsigned threads = std::thread::hardware_concurrency()) {
    if (threads == 0) threads = 1;
    for (unsigned i = 0; i < threads; ++i) {
      workers_.emplace_back([this] { run(); });
    }
  }

  ~ThreadPool() {
    {
      std::lock_guard lock(mu_);
      stop_ = true;
    }
    cv_.notify_all();
    for (auto& w : workers_) w.join();
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  size_t size() const { return workers_.size(); }

  /// Runs fn(i) for i in [0, n), block-partitioned across workers, and waits.
  void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    if (n == 0) return;
    size_t blocks = std::min(n, workers_.size() * 4);
    if (blocks <= 1) {
      for (size_t i = 0; i < n; ++i) fn(i);
      return;
    }
    std::atomic<size_t> remaining{blocks};
    std::mutex done_mu;
    std::condition_variable done_cv;
    size_t chunk = (n + blocks - 1) / blocks;
    for (size_t b = 0; b < blocks; ++b) {
      size_t lo = b * chunk;
      size_t hi = std::min(n, lo + chunk);
      submit([&, lo, hi] {
        for (size_t i = lo; i < hi; ++i) fn(i);
        if (remaining.fetch_sub(1) == 1) {
          std::lock_guard lk(done_mu);
          done_cv.notify_one();
        }
      });
    }
    std::unique_lock lk(done_mu);
    done_cv.wait(lk, [&] { return remaining.load() == 0; });
  }

  void submit(std::function<void()> task) {
    {
      std::lock_guard lock(mu_);
      queue_.push_back(std::move(task));
    }
    cv_.notify_one();
  }

  /// Process-wide pool sized to the hardware.
  static ThreadPool& shared() {
    static ThreadPool pool;
    return pool;
  }

 private:
  void run() {
    for (;;) {
      std::function<void()> task;
      {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [this] { return stop_ || !queue_.empty(); });
        if (stop_ && queue_.empty()) return;
        task = std::move(queue_.front());
        queue_.pop_front();
      }
      task();
    }
  }

  std::vector<std::thread> workers_;
  std::deque<std::function<void()>> queue_;
  std::mutex mu_;
  std::condition_variable cv_;
  bool stop_ = false;
};

}  // namespace livevv
