#ifndef AT2FF_IMAGE_HPP
#define AT2FF_IMAGE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace at2ff {

/// 8-bit grayscale image, row-major. Immutable after construction.
class GrayImage {
 public:
  /// Throws std::invalid_argument unless width, height > 0 and
  /// pixels.size() == width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  /// Image filled with a single intensity.
  static GrayImage filled(std::size_t width, std::size_t height, std::uint8_t value);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
  std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<std::uint8_t> pixels_;
};

/// raw / 255.
constexpr double normalize(std::uint8_t raw) noexcept { return static_cast<double>(raw) / 255.0; }

/// round(x * 255), half away from zero, clamped to [0, 255].
std::uint8_t denormalize(double x) noexcept;

/// Normalized intensities of the in-bounds part of a (2F+1)x(2F+1) window.
/// Border windows are truncated, never padded.
struct WindowView {
  std::size_t center_row = 0;
  std::size_t center_col = 0;
  int half_size = 1;
  /// Row-major over offsets (r, l) in [-F, F]^2, skipping out-of-bounds pixels.
  std::vector<double> values;
  double center_value = 0.0;
};

/// Throws std::out_of_range for coordinates outside the image and
/// std::invalid_argument for half_size < 1.
WindowView window(const GrayImage& img, std::size_t row, std::size_t col, int half_size);

}  // namespace at2ff

#endif  // AT2FF_IMAGE_HPP
