#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qcsat::detail {

inline unsigned resolve_threads(unsigned requested, std::uint64_t count) {
  if (requested != 0) return std::max(1u, requested);
  if (count < (1u << 16)) return 1;
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 16u);
}

// Runs body(begin, end) over a partition of [0, count). Chunks are disjoint,
// so bodies writing only to their own index range need no synchronization.
template <class F>
void parallel_for(std::uint64_t count, unsigned threads, F&& body) {
  threads = resolve_threads(threads, count);
  if (threads <= 1 || count < threads) {
    body(std::uint64_t{0}, count);
    return;
  }
  const std::uint64_t chunk = (count + threads - 1) / threads;
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) {
    const std::uint64_t lo = t * chunk;
    if (lo >= count) break;
    pool.emplace_back([&body, lo, hi = std::min(count, lo + chunk)] { body(lo, hi); });
  }
  body(0, std::min(count, chunk));
  for (auto& th : pool) th.join();
}

}  // namespace qcsat::detail
