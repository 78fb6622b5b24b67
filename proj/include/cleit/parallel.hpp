#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cleit {

// Ordered parallel map: results[i] = f(i) for i in [0, n). Work is split
// over hardware threads; assembly is by index, so the output is
// deterministic regardless of thread count. The lowest-index exception
// wins and is rethrown after all threads join.
template <typename F>
auto parallel_map(std::size_t n, F&& f)
    -> std::vector<decltype(f(std::size_t{0}))> {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> results(n);
  if (n == 0) return results;

  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > n) workers = n;

  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = f(i);
    return results;
  }

  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        results[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();

  for (std::size_t i = 0; i < n; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  return results;
}

}  // namespace cleit
