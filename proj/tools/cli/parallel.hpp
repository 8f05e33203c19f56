#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <thread>
#include <vector>

namespace radialgeo::cli {

/// out[i] = fn(i) for i < n, computed on a few threads; order is by index.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
  std::vector<T> out(n);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n));
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < n; i += workers) out[i] = fn(i);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace radialgeo::cli
