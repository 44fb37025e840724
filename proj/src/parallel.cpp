#include "therm/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace therm {

namespace {
std::atomic<int> g_threads{0};
}

void set_default_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int default_threads() {
  int n = g_threads.load();
  if (n == 0) {
    n = static_cast<int>(std::thread::hardware_concurrency());
    if (n == 0) n = 1;
  }
  return n;
}

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (threads <= 0) threads = default_threads();
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  if (workers <= 1) {
    fn(0, n);
    return;
  }
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr err;
  std::atomic<bool> has_err{false};
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t b = w * chunk;
    const std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, b, e] {
      try {
        fn(b, e);
      } catch (...) {
        if (!has_err.exchange(true)) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace therm
