#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace beatty_lab {

/// Splits [0, count) into contiguous chunks, runs fn(begin, end) on up to
/// `jobs` threads and returns the per-chunk results in chunk order. The
/// result is therefore independent of `jobs`, provided fn is pure.
template <class Fn>
auto map_chunks(std::uint64_t count, unsigned jobs, Fn&& fn)
    -> std::vector<decltype(fn(std::uint64_t{}, std::uint64_t{}))> {
  using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  std::vector<Result> results;
  if (count == 0) return results;
  if (jobs <= 1) {
    results.push_back(fn(std::uint64_t{0}, count));
    return results;
  }

  const std::uint64_t chunks = std::min<std::uint64_t>(count, std::uint64_t{jobs} * 4);
  const std::uint64_t step = (count + chunks - 1) / chunks;
  const std::uint64_t n_chunks = (count + step - 1) / step;
  results.resize(n_chunks);
  std::vector<std::exception_ptr> errors(n_chunks);
  std::atomic<std::uint64_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= n_chunks) return;
      const std::uint64_t begin = i * step;
      const std::uint64_t end = std::min(count, begin + step);
      try {
        results[i] = fn(begin, end);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    const auto n_threads = std::min<std::uint64_t>(jobs, n_chunks);
    pool.reserve(n_threads);
    for (std::uint64_t t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace beatty_lab
