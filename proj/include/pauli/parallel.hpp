#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pauli {

/// PAULI_NECKLACE_THREADS if set to a positive integer, else the machine's
/// hardware concurrency (at least 1).
unsigned default_thread_count();

/// Calls fn(i, worker) for i in [0, count), item i going to worker
/// i % threads. The first exception thrown by any worker is rethrown.
template <typename Fn>
void for_each_index(std::uint64_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1U, threads);
  if (threads == 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i, 0U);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < count; i += threads) fn(i, w);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Ordered results of fn(i) for i in [0, count).
template <typename T, typename Fn>
std::vector<T> parallel_map(std::uint64_t count, unsigned threads, Fn&& fn) {
  std::vector<T> out(count);
  for_each_index(count, threads, [&](std::uint64_t i, unsigned) { out[i] = fn(i); });
  return out;
}

}  // namespace pauli
