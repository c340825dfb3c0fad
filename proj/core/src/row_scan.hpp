#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace ringmap::detail {

/// Worker count for grid scans, read once from RINGMAP_THREADS (default 1).
int scan_threads();

/** Evaluates fn(row) for row = 0..rows-1, fanning out over scan_threads()
 * workers, and returns the results in row order. Callers reduce the rows
 * sequentially, so results are bit-stable for any thread count. */
template <typename T, typename Fn>
std::vector<T> map_rows(int rows, Fn&& fn) {
  std::vector<T> out(rows > 0 ? static_cast<size_t>(rows) : 0);
  const int workers = std::min(scan_threads(), rows > 0 ? rows : 1);
  if (workers <= 1) {
    for (int r = 0; r < rows; ++r) out[static_cast<size_t>(r)] = fn(r);
    return out;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int r = next.fetch_add(1); r < rows; r = next.fetch_add(1))
        out[static_cast<size_t>(r)] = fn(r);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

} // namespace ringmap::detail
