#ifndef AT2FF_BASELINES_HPP
#define AT2FF_BASELINES_HPP

#include <cstdint>
#include <span>

#include "at2ff/image.hpp"

namespace at2ff {

/// Median of a sample; even counts average the two middle values, rounded
/// half away from zero. `sample` is reordered.
std::uint8_t median_of(std::span<std::uint8_t> sample);

/// Median of the sample after discarding values farther from the median
/// than the nearer extreme. Symmetric samples are left untouched.
/// `sample` is reordered.
std::uint8_t truncated_median_of(std::span<std::uint8_t> sample);

/// Standard median filter over truncated (2F+1)x(2F+1) windows.
GrayImage median_filter(const GrayImage& img, int half_size = 1, unsigned threads = 1);

/// Truncated median filter over truncated (2F+1)x(2F+1) windows.
GrayImage truncated_median_filter(const GrayImage& img, int half_size = 1, unsigned threads = 1);

}  // namespace at2ff

#endif  // AT2FF_BASELINES_HPP
