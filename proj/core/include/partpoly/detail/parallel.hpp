#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace partpoly::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(index, local) for index in [0, count) across workers. Each
// worker owns an Acc; results are combined with merge(into, from) in worker
// order. Totals do not depend on scheduling as long as merge is commutative.
template <class Acc, class Body, class Merge>
Acc parallel_accumulate(std::size_t count, unsigned threads, Body&& body, Merge&& merge) {
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::vector<Acc> locals(threads);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, locals[0]);
    return std::move(locals[0]);
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](unsigned w) {
    try {
      for (;;) {
        const auto i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        body(i, locals[w]);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  for (unsigned w = 1; w < threads; ++w) merge(locals[0], locals[w]);
  return std::move(locals[0]);
}

}  // namespace partpoly::detail
