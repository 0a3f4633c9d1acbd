#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wgm {

/// Resolves a requested worker count; 0 means "all hardware threads".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(i) for i in [0, count) on up to `workers` threads. Workers pull
/// fixed-size chunks from a shared counter, so idle threads pick up slack.
/// The result of each call must depend only on i; nothing here orders side
/// effects. If calls throw, the exception from the lowest index is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body,
                  std::size_t chunk = 64) {
  workers = resolve_workers(workers);
  if (workers == 1 || count <= chunk) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_index = count;

  auto worker = [&] {
    for (;;) {
      const std::size_t begin = next.fetch_add(chunk);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + chunk);
      for (std::size_t i = begin; i < end; ++i) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
          break;
        }
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(workers, (count + chunk - 1) / chunk);
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
}

/// Ordered parallel map: out[i] = fn(i).
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned workers, Fn&& fn,
                            std::size_t chunk = 64) {
  std::vector<T> out(count);
  parallel_for(
      count, workers, [&](std::size_t i) { out[i] = fn(i); }, chunk);
  return out;
}

}  // namespace wgm
