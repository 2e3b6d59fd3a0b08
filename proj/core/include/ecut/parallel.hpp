#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace ecut {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Calls body(begin, end, chunk_index) on contiguous chunks of [0, n).
// Chunk boundaries depend only on n and threads.
template <class Body>
void parallel_chunks(std::size_t n, int threads, Body&& body) {
  const auto t = static_cast<std::size_t>(std::max(1, threads));
  if (t == 1 || n < 2048) {
    body(std::size_t{0}, n, std::size_t{0});
    return;
  }
  const std::size_t chunks = std::min(t, n);
  std::vector<std::thread> pool;
  pool.reserve(chunks - 1);
  for (std::size_t c = 1; c < chunks; ++c) {
    pool.emplace_back([&, c] { body(n * c / chunks, n * (c + 1) / chunks, c); });
  }
  body(std::size_t{0}, n / chunks, std::size_t{0});
  for (auto& th : pool) th.join();
}

}  // namespace ecut
