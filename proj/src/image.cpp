#include "at2ff/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace at2ff {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ == 0 || height_ == 0) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  if (pixels_.size() != width_ * height_) {
    throw std::invalid_argument("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                                std::to_string(width_) + "x" + std::to_string(height_));
  }
}

GrayImage GrayImage::filled(std::size_t width, std::size_t height, std::uint8_t value) {
  return GrayImage(width, height, std::vector<std::uint8_t>(width * height, value));
}

std::uint8_t denormalize(double x) noexcept {
  // std::round rounds halfway cases away from zero.
  const double scaled = std::round(x * 255.0);
  return static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 255.0));
}

WindowView window(const GrayImage& img, std::size_t row, std::size_t col, int half_size) {
  if (row >= img.height() || col >= img.width()) {
    throw std::out_of_range("window center (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside " + std::to_string(img.width()) + "x" +
                            std::to_string(img.height()) + " image");
  }
  if (half_size < 1) {
    throw std::invalid_argument("half window size must be >= 1");
  }

  const auto f = static_cast<std::ptrdiff_t>(half_size);
  const auto r = static_cast<std::ptrdiff_t>(row);
  const auto c = static_cast<std::ptrdiff_t>(col);
  const std::ptrdiff_t r0 = std::max<std::ptrdiff_t>(0, r - f);
  const std::ptrdiff_t r1 = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(img.height()) - 1, r + f);
  const std::ptrdiff_t c0 = std::max<std::ptrdiff_t>(0, c - f);
  const std::ptrdiff_t c1 = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(img.width()) - 1, c + f);

  WindowView w;
  w.center_row = row;
  w.center_col = col;
  w.half_size = half_size;
  w.center_value = normalize(img.at(row, col));
  w.values.reserve(static_cast<std::size_t>((r1 - r0 + 1) * (c1 - c0 + 1)));
  for (std::ptrdiff_t i = r0; i <= r1; ++i) {
    for (std::ptrdiff_t j = c0; j <= c1; ++j) {
      w.values.push_back(normalize(img.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
    }
  }
  return w;
}

}  // namespace at2ff
