#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace binsub {

// Evaluates jobs 0..n-1 and consumes the results strictly in job order;
// consume returning false stops the run (later results already computed in
// the same round are discarded). Evaluation happens in rounds of `threads`
// jobs, so the consumed sequence -- and any early-stop point -- is identical
// for every thread count.
template <class R>
void run_ordered(std::uint64_t n, int threads,
                 const std::function<R(std::uint64_t)>& eval,
                 const std::function<bool(std::uint64_t, R&)>& consume) {
  if (threads < 2 || n < 2) {
    for (std::uint64_t i = 0; i < n; ++i) {
      R r = eval(i);
      if (!consume(i, r)) return;
    }
    return;
  }
  const std::uint64_t width = static_cast<std::uint64_t>(threads);
  std::vector<R> slots(static_cast<size_t>(width));
  std::vector<std::exception_ptr> errors(static_cast<size_t>(width));
  for (std::uint64_t start = 0; start < n; start += width) {
    const std::uint64_t count = std::min(width, n - start);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(count - 1));
    for (std::uint64_t t = 1; t < count; ++t) {
      pool.emplace_back([&, t] {
        try {
          slots[static_cast<size_t>(t)] = eval(start + t);
        } catch (...) {
          errors[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    }
    try {
      slots[0] = eval(start);
    } catch (...) {
      errors[0] = std::current_exception();
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t j = 0; j < count; ++j) {
      if (errors[static_cast<size_t>(j)]) {
        std::rethrow_exception(errors[static_cast<size_t>(j)]);
      }
      if (!consume(start + j, slots[static_cast<size_t>(j)])) return;
    }
  }
}

}  // namespace binsub
