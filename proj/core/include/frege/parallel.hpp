#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace frege {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(slot, begin, end) on contiguous index blocks, one slot per
/// worker. Block boundaries depend only on (total, threads); workers write
/// to their own slot and the caller merges slots in order, so results never
/// depend on scheduling.
inline void parallel_blocks(std::int64_t total, int threads,
                            const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
  threads = resolve_threads(threads);
  if (total <= 0) return;
  if (threads > total) threads = static_cast<int>(total);
  if (threads <= 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const std::int64_t chunk = total / threads;
  const std::int64_t extra = total % threads;
  std::int64_t begin = 0;
  for (int slot = 0; slot < threads; ++slot) {
    const std::int64_t end = begin + chunk + (slot < extra ? 1 : 0);
    pool.emplace_back([&fn, slot, begin, end] { fn(slot, begin, end); });
    begin = end;
  }
  for (auto& th : pool) th.join();
}

} // namespace frege
