//
// btr - Copyright 2026 The btr Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef BTR_PARALLEL_H_
#define BTR_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace btr {

// jobs <= 0 means hardware parallelism.
inline int resolve_jobs(int jobs) {
  if (jobs > 0)
    return jobs;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Calls fn(begin, end) over chunks of [0, count) from a bounded pool of
// workers. The first exception thrown by any chunk is rethrown here.
template <class F>
void parallel_chunks(std::int64_t count, int jobs, std::int64_t chunk, F &&fn) {
  if (count <= 0)
    return;
  chunk = std::max<std::int64_t>(chunk, 1);
  const int workers = static_cast<int>(std::min<std::int64_t>(
      resolve_jobs(jobs), (count + chunk - 1) / chunk));
  if (workers <= 1) {
    for (std::int64_t b = 0; b < count; b += chunk)
      fn(b, std::min(count, b + chunk));
    return;
  }

  std::atomic<std::int64_t> next { 0 };
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto work = [&] {
    for (;;) {
      const std::int64_t b = next.fetch_add(chunk);
      if (b >= count)
        return;
      try {
        fn(b, std::min(count, b + chunk));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int i = 0; i < workers; ++i)
    pool.emplace_back(work);
  for (auto &t: pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

}  // namespace btr

#endif  // BTR_PARALLEL_H_
