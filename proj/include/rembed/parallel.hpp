#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace rembed {

/// 0 or negative means one worker per hardware thread.
inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

/*
  Splits [0, total) into `jobs` contiguous chunks and calls
  fn(chunk, begin, end) for each, one thread per chunk. The first exception
  thrown by any worker is rethrown after all workers join.
*/
template <class Fn>
void parallel_chunks(std::uint64_t total, int jobs, Fn&& fn) {
  const auto workers = static_cast<std::uint64_t>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_jobs(jobs), std::max<std::uint64_t>(total, 1))));
  if (workers == 1) {
    fn(std::uint64_t{0}, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    threads.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace rembed
