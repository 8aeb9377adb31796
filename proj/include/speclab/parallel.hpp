#pragma once

#include <thread>
#include <vector>

namespace speclab {

// Static fan-out over [0, n); results must be written by index so that
// aggregation stays order-deterministic regardless of the pool size.
template <typename F>
void parallel_for(int n, int threads, F&& body) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  const int workers = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace speclab
