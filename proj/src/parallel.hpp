#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace lss::detail {

// Runs fn(r0, r1) over contiguous row stripes. Stripes write disjoint output,
// and per-pixel work never depends on other pixels, so results are identical
// for any stripe count. Worker exceptions are rethrown on the calling thread.
inline void parallel_rows(int rows, int threads,
                          const std::function<void(int, int)>& fn) {
  int t = threads > 0 ? threads
                      : static_cast<int>(std::thread::hardware_concurrency());
  if (t < 1) t = 1;
  if (t > rows) t = rows;
  if (t == 1) {
    fn(0, rows);
    return;
  }
  std::vector<std::exception_ptr> errors(t);
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (int w = 0; w < t; ++w) {
    int r0 = static_cast<int>(static_cast<long long>(rows) * w / t);
    int r1 = static_cast<int>(static_cast<long long>(rows) * (w + 1) / t);
    pool.emplace_back([&, w, r0, r1] {
      try {
        fn(r0, r1);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lss::detail
