#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace oscgk {

/// Applies fn(i) for i in [0, count) on up to `threads` workers, writing
/// results into a pre-sized vector. Output order is by index, so results do
/// not depend on the parallelism level.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, int threads, Fn fn) {
  std::vector<T> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace oscgk
