#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace dso::detail {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Applies fn to every index in [0, count) on up to `jobs` threads. Each index
/// is handled by exactly one worker; callers write into pre-sized slots.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

} // namespace dso::detail
