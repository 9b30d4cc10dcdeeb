#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace onassign {

/// Worker cap from ONASSIGN_THREADS; defaults to 1 (fully sequential runs).
inline int configured_threads() {
  const char* env = std::getenv("ONASSIGN_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

/// Runs fn(i) for i in [0, n). Results must be written into per-index slots;
/// chunking is static, so output is identical for any thread count.
inline void parallel_for(long n, const std::function<void(long)>& fn) {
  int threads = configured_threads();
  if (threads <= 1 || n <= 1) {
    for (long i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = static_cast<int>(std::min<long>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w]() {
      for (long i = w; i < n; i += threads) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace onassign
