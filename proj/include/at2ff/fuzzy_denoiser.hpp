#ifndef AT2FF_FUZZY_DENOISER_HPP
#define AT2FF_FUZZY_DENOISER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "at2ff/image.hpp"
#include "at2ff/type2_detector.hpp"

namespace at2ff {

/// Window pixels that are not at a salt-and-pepper extreme (0 or 1), in window order.
struct GoodPixelSet {
  std::vector<double> values;
  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
};

/// Mean and epsilon-scaled mean absolute deviation of the good pixels.
struct GoodStats {
  double nu = 0.0;
  double sigma = 0.0;
};

/// Scale on which the luminance difference is compared against the membership
/// thresholds when forming the fuzzy flag.
enum class MaldScale {
  /// 8-bit intensity levels (0..255). Any corrupted pixel differing from a
  /// neighbour by at least one level is flagged at T_h.
  Raw8Bit,
  /// Normalized intensities in [0, 1]; the flag then ramps with the difference.
  Normalized,
};

struct DenoiseConfig {
  /// Deviation multiplier, must exceed 1.
  double epsilon = 1.2;
  /// Starting half window. nullopt selects 1 or 2 from the estimated noise density.
  std::optional<int> f_init;
  int f_max = 5;
  /// Detector spread below which a window counts as homogeneous (normalized units).
  double tau_hom = 1.0 / 255.0;
  /// Estimated density above which the automatic start is F = 2.
  double density_switch = 0.5;
  MaldScale mald_scale = MaldScale::Raw8Bit;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

GoodPixelSet good_pixels(const WindowView& w);

/// Throws std::invalid_argument for an empty set.
GoodStats good_stats(const GoodPixelSet& g, double epsilon);

/// Gaussian weight of each good pixel around `s.nu`; all ones when s.sigma == 0.
std::vector<double> weights(const GoodPixelSet& g, const GoodStats& s);

/// Normalized weighted average. Throws std::invalid_argument for empty input,
/// mismatched sizes or a non-positive total weight.
double weighted_mean(const GoodPixelSet& g, const std::vector<double>& w);

/// (1 - f) p + f p_new.
constexpr double blend(double p, double p_new, FuzzyFlag f) noexcept {
  return (1.0 - f.value) * p + f.value * p_new;
}

/// Fraction of pixels whose raw value is 0 or 255.
double estimate_noise_density(const GrayImage& img);

/// Half window the per-pixel loop starts from under `cfg`, clamped to f_max.
int initial_half_size(const GrayImage& img, const DenoiseConfig& cfg);

/// Which branch of the per-pixel procedure produced the output.
enum class PixelPath {
  /// Input was not at 0/255.
  NotExtreme,
  /// The envelope at the pixel reached T_h; the extreme value is kept.
  RetainedByEnvelope,
  /// Detector spread at most tau_hom; output is the detector center.
  Homogeneous,
  /// Weighted good-pixel estimate blended by the fuzzy flag.
  Blended,
  /// No good pixels up to f_max; output is the detector center of the last window.
  Fallback,
};

struct PixelDecision {
  std::uint8_t value = 0;
  PixelPath path = PixelPath::NotExtreme;
  /// Half window at which the decision was made (0 for NotExtreme).
  int half_size = 0;
  /// Window sizes tried.
  int iterations = 0;
};

PixelDecision explain_pixel(const GrayImage& img, std::size_t row, std::size_t col, const DenoiseConfig& cfg,
                            int start_half_size);

/// Restores one pixel. Pixels not at 0/255 are returned unchanged; windows
/// are always read from `img` itself.
std::uint8_t denoise_pixel(const GrayImage& img, std::size_t row, std::size_t col, const DenoiseConfig& cfg);

/// Same as above with the starting half window already resolved, so a whole
/// image pass estimates the noise density only once.
std::uint8_t denoise_pixel(const GrayImage& img, std::size_t row, std::size_t col, const DenoiseConfig& cfg,
                           int start_half_size);

/// Non-recursive whole-image pass. Rows are split across `threads` workers;
/// the result does not depend on the thread count.
GrayImage denoise_image(const GrayImage& img, const DenoiseConfig& cfg, unsigned threads = 1);

}  // namespace at2ff

#endif  // AT2FF_FUZZY_DENOISER_HPP
