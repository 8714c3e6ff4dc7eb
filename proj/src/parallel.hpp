#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace netspread::detail {

inline std::size_t worker_count(std::size_t n, std::size_t min_per_worker = 16) {
  std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::min(workers, std::max<std::size_t>(1, n / min_per_worker));
}

// Runs body(worker, begin, end) over contiguous slices of [0, n).
// Callers write results by index, so output never depends on scheduling.
template <typename Body>
void parallel_for(std::size_t n, Body&& body, std::size_t min_per_worker = 16) {
  const std::size_t workers = worker_count(n, min_per_worker);
  if (workers <= 1) {
    body(std::size_t{0}, std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(n, w * chunk);
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace netspread::detail
