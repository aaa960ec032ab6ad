#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace lagsob::detail {

// Runs body(i) for i in [0, count) on up to `threads` workers, strided.
template <class Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::future<void>> workers;
  workers.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += threads) body(i);
    }));
  }
  for (auto& f : workers) f.get();
}

}  // namespace lagsob::detail
