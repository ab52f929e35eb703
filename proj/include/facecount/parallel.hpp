#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace facecount {

/// FACECOUNT_WORKERS if set to a positive integer, else the hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("FACECOUNT_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Applies fn to 0..n-1 and returns the results in index order, whatever the
/// worker count. The first exception (by index) is rethrown.
template <typename Fn>
auto parallel_map(std::size_t n, Fn fn, unsigned workers = 0) {
  using R = decltype(fn(std::size_t{0}));
  if (workers == 0) workers = default_workers();
  std::vector<R> out(n);
  if (workers == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const auto count = std::min<std::size_t>(workers, n);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace facecount
