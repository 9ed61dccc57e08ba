#pragma once

// Deterministic chunked parallelism: work is split into fixed chunks that do
// not depend on the thread count, each chunk writes only its own slot, and
// callers combine the slots in chunk order.  Any thread count therefore
// reproduces the serial result bit for bit.

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace szeta {

inline unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? n : 1;
}

// fn(chunk_index, begin, end) over [0, n) partitioned into chunks of
// `chunk` items; chunk slots are claimed through an atomic counter.
inline void for_chunks(std::size_t n, std::size_t chunk, unsigned threads,
                       const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (chunk == 0) chunk = 1;
  const std::size_t nchunks = (n + chunk - 1) / chunk;
  if (threads <= 1 || nchunks <= 1) {
    for (std::size_t c = 0; c < nchunks; ++c) fn(c, c * chunk, std::min(n, (c + 1) * chunk));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= nchunks) return;
      fn(c, c * chunk, std::min(n, (c + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  unsigned use = std::min<std::size_t>(threads, nchunks);
  pool.reserve(use);
  for (unsigned i = 0; i < use; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace szeta
