#ifndef AT2FF_NOISE_HPP
#define AT2FF_NOISE_HPP

#include <cstddef>
#include <cstdint>

#include "at2ff/image.hpp"

namespace at2ff {

struct NoiseSpec {
  /// Probability that a pixel is corrupted.
  double density = 0.0;
  std::uint64_t seed = 0;
  /// Probability that a corrupted pixel becomes 255 rather than 0.
  double salt_ratio = 0.5;

  /// Throws std::invalid_argument unless density and salt_ratio lie in [0, 1].
  void validate() const;
};

/// Counter-based uniform variate in [0, 1): the SplitMix64 finalizer applied
/// to seed + 0x9E3779B97F4A7C15 * (2 * index + stream + 1), top 53 bits
/// scaled by 2^-53. Streams 0 and 1 are used for the corruption and the
/// salt/pepper draw respectively.
double counter_uniform(std::uint64_t seed, std::uint64_t index, unsigned stream) noexcept;

/// Whether pixel `index` (row-major) is selected for corruption under `spec`.
bool sap_selected(const NoiseSpec& spec, std::size_t index) noexcept;

/// Independently sets each pixel to 0 or 255 with probability spec.density.
/// A pure function of (img, spec).
GrayImage inject_sap(const GrayImage& img, const NoiseSpec& spec);

/// Number of pixels selected for corruption in an image of `pixel_count` pixels.
std::size_t sap_selected_count(const NoiseSpec& spec, std::size_t pixel_count);

}  // namespace at2ff

#endif  // AT2FF_NOISE_HPP
