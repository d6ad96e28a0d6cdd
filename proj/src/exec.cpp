#include "daggercat/exec.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace daggercat {

namespace {
std::atomic<int> g_threads{1};
}

int parallelism() { return g_threads.load(); }

void set_parallelism(int threads) { g_threads.store(std::max(1, threads)); }

std::optional<std::int64_t> first_violation(
    std::int64_t n, const std::function<bool(std::int64_t)>& pred) {
  const int workers = std::min<std::int64_t>(parallelism(), std::max<std::int64_t>(n, 1));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i)
      if (!pred(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::int64_t> best{n};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < n; i += workers) {
        if (i >= best.load(std::memory_order_relaxed)) break;
        if (!pred(i)) {
          std::int64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          break;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  const std::int64_t hit = best.load();
  if (hit == n) return std::nullopt;
  return hit;
}

std::vector<std::uint8_t> map_flags(
    std::int64_t n, const std::function<bool(std::int64_t)>& pred) {
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)), 0);
  const int workers = std::min<std::int64_t>(parallelism(), std::max<std::int64_t>(n, 1));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i)
      flags[static_cast<std::size_t>(i)] = pred(i) ? 1 : 0;
    return flags;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::int64_t i = w; i < n; i += workers)
        flags[static_cast<std::size_t>(i)] = pred(i) ? 1 : 0;
    });
  }
  for (auto& t : pool) t.join();
  return flags;
}

}  // namespace daggercat
