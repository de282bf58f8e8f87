#include "at2ff/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace at2ff {

double mse(const GrayImage& reference, const GrayImage& test) {
  if (reference.width() != test.width() || reference.height() != test.height()) {
    throw std::invalid_argument("image dimensions differ");
  }
  const auto a = reference.pixels();
  const auto b = test.pixels();
  // Integer accumulation is exact for any realistic image size.
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int d = static_cast<int>(a[i]) - static_cast<int>(b[i]);
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(a.size());
}

double psnr(const GrayImage& reference, const GrayImage& test) {
  const double e = mse(reference, test);
  if (e == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / e);
}

std::string format_psnr(double db) {
  if (std::isinf(db)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", db);
  return buf;
}

}  // namespace at2ff
