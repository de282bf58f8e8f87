#include "at2ff/baselines.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "parallel.hpp"

namespace at2ff {

namespace {

std::uint8_t median_sorted(std::span<const std::uint8_t> s) {
  const std::size_t n = s.size();
  if (n % 2 == 1) return s[n / 2];
  // (a + b + 1) / 2 is round-half-up, which equals half-away for non-negatives.
  return static_cast<std::uint8_t>((s[n / 2 - 1] + s[n / 2] + 1) / 2);
}

template <typename PerWindow>
GrayImage window_filter(const GrayImage& img, int half_size, unsigned threads, PerWindow per_window) {
  if (half_size < 1) throw std::invalid_argument("half window size must be >= 1");
  const std::size_t w = img.width();
  const std::size_t h = img.height();
  const auto f = static_cast<std::size_t>(half_size);
  std::vector<std::uint8_t> out(img.size());
  detail::for_each_row(h, threads, [&](std::size_t r) {
    std::vector<std::uint8_t> sample;
    sample.reserve((2 * f + 1) * (2 * f + 1));
    const std::size_t r0 = r >= f ? r - f : 0;
    const std::size_t r1 = std::min(h - 1, r + f);
    for (std::size_t c = 0; c < w; ++c) {
      const std::size_t c0 = c >= f ? c - f : 0;
      const std::size_t c1 = std::min(w - 1, c + f);
      sample.clear();
      for (std::size_t i = r0; i <= r1; ++i) {
        for (std::size_t j = c0; j <= c1; ++j) sample.push_back(img.at(i, j));
      }
      out[r * w + c] = per_window(std::span<std::uint8_t>(sample));
    }
  });
  return GrayImage(w, h, std::move(out));
}

}  // namespace

std::uint8_t median_of(std::span<std::uint8_t> sample) {
  if (sample.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(sample.begin(), sample.end());
  return median_sorted(sample);
}

std::uint8_t truncated_median_of(std::span<std::uint8_t> sample) {
  if (sample.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(sample.begin(), sample.end());
  const int med = median_sorted(sample);
  const int reach = std::min(med - sample.front(), sample.back() - med);
  const auto first = std::lower_bound(sample.begin(), sample.end(), med - reach);
  const auto last = std::upper_bound(sample.begin(), sample.end(), med + reach);
  return median_sorted({first, last});
}

GrayImage median_filter(const GrayImage& img, int half_size, unsigned threads) {
  return window_filter(img, half_size, threads, [](std::span<std::uint8_t> s) { return median_of(s); });
}

GrayImage truncated_median_filter(const GrayImage& img, int half_size, unsigned threads) {
  return window_filter(img, half_size, threads, [](std::span<std::uint8_t> s) { return truncated_median_of(s); });
}

}  // namespace at2ff
