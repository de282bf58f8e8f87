#include "at2ff/noise.hpp"

#include <stdexcept>
#include <vector>

namespace at2ff {

void NoiseSpec::validate() const {
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("noise density must lie in [0, 1]");
  if (!(salt_ratio >= 0.0 && salt_ratio <= 1.0)) throw std::invalid_argument("salt ratio must lie in [0, 1]");
}

double counter_uniform(std::uint64_t seed, std::uint64_t index, unsigned stream) noexcept {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (2 * index + stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

bool sap_selected(const NoiseSpec& spec, std::size_t index) noexcept {
  return counter_uniform(spec.seed, index, 0) < spec.density;
}

GrayImage inject_sap(const GrayImage& img, const NoiseSpec& spec) {
  spec.validate();
  std::vector<std::uint8_t> out(img.pixels().begin(), img.pixels().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (sap_selected(spec, i)) {
      out[i] = counter_uniform(spec.seed, i, 1) < spec.salt_ratio ? 255 : 0;
    }
  }
  return GrayImage(img.width(), img.height(), std::move(out));
}

std::size_t sap_selected_count(const NoiseSpec& spec, std::size_t pixel_count) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < pixel_count; ++i) n += sap_selected(spec, i) ? 1 : 0;
  return n;
}

}  // namespace at2ff
