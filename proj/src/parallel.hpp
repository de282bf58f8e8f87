#ifndef AT2FF_SRC_PARALLEL_HPP
#define AT2FF_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace at2ff::detail {

// Calls fn(row) for every row in [0, rows), interleaving rows across
// `threads` workers. fn must only write state owned by its row.
template <typename Fn>
void for_each_row(std::size_t rows, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(rows, 1));
  if (workers == 1) {
    for (std::size_t r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&fn, rows, workers, t] {
      for (std::size_t r = t; r < rows; r += workers) fn(r);
    });
  }
}

}  // namespace at2ff::detail

#endif  // AT2FF_SRC_PARALLEL_HPP
