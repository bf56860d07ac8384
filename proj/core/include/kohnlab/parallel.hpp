#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace kohnlab::num {

// Static block partition of [0, n) over `threads` workers. Each index is
// processed exactly once and results must be written to per-index slots, so
// output is bit-identical for any thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                         int threads = 0) {
  if (n == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t nt = threads > 0 ? static_cast<std::size_t>(threads) : (hw ? hw : 1);
  nt = std::min(nt, n);
  if (nt <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mutex;
  for (std::size_t t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      const std::size_t lo = n * t / nt, hi = n * (t + 1) / nt;
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace kohnlab::num
