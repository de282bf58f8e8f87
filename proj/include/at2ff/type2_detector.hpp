#ifndef AT2FF_TYPE2_DETECTOR_HPP
#define AT2FF_TYPE2_DETECTOR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "at2ff/image.hpp"

namespace at2ff {

/// Per-window statistics of the interval type-2 noise detector. All values
/// are in normalized intensity units.
struct Type2Params {
  /// Trimmed means, means[k-1] = mean of the k-middle of the sorted window, k = 1..h.
  std::vector<double> means;
  /// Trimmed means of the sorted epsilon-scaled deviations |p - nu|.
  std::vector<double> sigmas;
  /// Average of `means`.
  double nu = 0.0;
  /// Average of `sigmas`; the shared width of every envelope Gaussian.
  double sigma_bar = 0.0;
  /// Indices into `means` of its minimum and maximum (first occurrence).
  std::size_t k_lo = 0;
  std::size_t k_hi = 0;

  double m_lo() const { return means[k_lo]; }
  double m_hi() const { return means[k_hi]; }
};

/// UMF (row 1) and LMF (row 2) evaluated at every window pixel, in window order.
struct MembershipMatrix {
  std::vector<double> upper;
  std::vector<double> lower;
};

struct Thresholds {
  double t_low = 0.0;
  double t_high = 0.0;
};

struct FuzzyFlag {
  double value = 0.0;
};

struct Envelope {
  double upper = 0.0;
  double lower = 0.0;
};

/// h = ceil(N / 2): the number of distinct k-middle means of an N-element sample.
constexpr std::size_t middle_count(std::size_t n) noexcept { return (n + 1) / 2; }

/// Mean of the k-middle of an ascending sample: the 2k-1 (odd N) or 2k
/// (even N) centered order statistics. k = 1 gives the median.
/// Throws std::invalid_argument on empty input or k outside [1, h].
double mean_of_k_middle(std::span<const double> sorted_values, std::size_t k);

/// All h k-middle means at once via prefix sums; result[k-1] == mean_of_k_middle(sorted, k).
std::vector<double> all_k_middle_means(std::span<const double> sorted_values);

/// Maximum absolute luminance difference between the center and any window
/// pixel. Throws std::invalid_argument for windows with fewer than 2 pixels.
double m_ald(const WindowView& w);

/// Gaussian membership exp(-((x - m) / sigma)^2 / 2). sigma == 0 degenerates
/// to the indicator of x == m.
double gmf(double x, double m, double sigma) noexcept;

/// Throws std::invalid_argument for windows with fewer than 2 pixels or
/// epsilon <= 1.
Type2Params detector_params(const WindowView& w, double epsilon);

/// Upper and lower membership of intensity x under the footprint spanned by
/// the trimmed means, all Gaussians sharing width sigma_bar.
Envelope umf_lmf(const Type2Params& params, double x) noexcept;

MembershipMatrix membership_matrix(const Type2Params& params, const WindowView& w);

/// T_h = max over all entries, T_l = max over columns of the column minimum.
/// Throws std::invalid_argument for an empty matrix.
Thresholds thresholds(const MembershipMatrix& mu);

/// Piecewise flag: T_l below T_l, linear ramp on (T_l, T_h), T_h at or above
/// T_h. A collapsed interval (T_h == T_l) yields T_h.
FuzzyFlag fuzzy_flag(double mald, const Thresholds& t) noexcept;

}  // namespace at2ff

#endif  // AT2FF_TYPE2_DETECTOR_HPP
