#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace benlab {

/// 0 means "all hardware threads".
inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Worker count from BENLAB_WORKERS, or 0 (all cores) if unset/invalid.
inline unsigned workers_from_env() {
  if (const char* v = std::getenv("BENLAB_WORKERS")) {
    try {
      const long n = std::stol(v);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (...) {
    }
  }
  return 0;
}

/// Splits [0, n) into fixed chunks and evaluates `chunk_fn(begin, end)` for
/// each, returning results in chunk order. Chunk boundaries depend only on n
/// and chunk_size, never on the worker count, so ordered reductions over the
/// result are reproducible.
template <typename ChunkFn>
auto parallel_chunks(std::size_t n, std::size_t chunk_size, unsigned workers,
                     ChunkFn chunk_fn) {
  using Result = decltype(chunk_fn(std::size_t{0}, std::size_t{0}));
  chunk_size = std::max<std::size_t>(1, chunk_size);
  const std::size_t chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<Result> results(chunks);
  const unsigned nthreads = static_cast<unsigned>(
      std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(1, chunks)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        const std::size_t b = c * chunk_size;
        results[c] = chunk_fn(b, std::min(n, b + chunk_size));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };

  if (nthreads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace benlab
