#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fockstat {

/// Evaluates fn(0..count-1) on a small thread pool and returns the results
/// in index order. The first exception thrown by any task is rethrown after
/// all workers have stopped.
template <class Result, class Fn>
std::vector<Result> parallelMap(std::size_t count, Fn&& fn, unsigned threads = 0) {
  std::vector<Result> results(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::size_t errorIndex = count;
  std::mutex errorMutex;

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(errorMutex);
        // Keep the lowest failing index so the reported error is stable.
        if (i < errorIndex) {
          errorIndex = i;
          error = std::current_exception();
        }
        stop = true;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace fockstat
