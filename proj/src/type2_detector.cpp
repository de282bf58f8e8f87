#include "at2ff/type2_detector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace at2ff {

namespace {

// Mean of a slice taken as anchor + mean(v - anchor). A slice of values all
// equal to the anchor then yields the anchor exactly, which the degenerate
// zero-width Gaussian relies on.
double anchored_mean(std::span<const double> slice, double anchor) {
  double sum = 0.0;
  for (double v : slice) sum += v - anchor;
  return anchor + sum / static_cast<double>(slice.size());
}

double k_middle_unchecked(std::span<const double> sorted, std::size_t k) {
  const std::size_t n = sorted.size();
  const std::size_t h = middle_count(n);
  // 0-based: odd N covers [h-k, h+k-2], even N covers [h-k, h+k-1].
  const std::size_t first = h - k;
  const std::size_t count = (n % 2 == 1) ? 2 * k - 1 : 2 * k;
  return anchored_mean(sorted.subspan(first, count), sorted[h - 1]);
}

void require_window(const WindowView& w) {
  if (w.values.size() < 2) {
    throw std::invalid_argument("detector needs a window of at least 2 pixels");
  }
}

}  // namespace

double mean_of_k_middle(std::span<const double> sorted_values, std::size_t k) {
  if (sorted_values.empty()) throw std::invalid_argument("mean_of_k_middle: empty input");
  const std::size_t h = middle_count(sorted_values.size());
  if (k < 1 || k > h) {
    throw std::invalid_argument("mean_of_k_middle: k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(h) + "]");
  }
  return k_middle_unchecked(sorted_values, k);
}

std::vector<double> all_k_middle_means(std::span<const double> sorted_values) {
  if (sorted_values.empty()) throw std::invalid_argument("all_k_middle_means: empty input");
  const std::size_t h = middle_count(sorted_values.size());
  std::vector<double> out(h);
  for (std::size_t k = 1; k <= h; ++k) out[k - 1] = k_middle_unchecked(sorted_values, k);
  return out;
}

double m_ald(const WindowView& w) {
  require_window(w);
  double best = 0.0;
  for (double v : w.values) best = std::max(best, std::abs(v - w.center_value));
  return best;
}

double gmf(double x, double m, double sigma) noexcept {
  if (sigma <= 0.0) return x == m ? 1.0 : 0.0;
  const double z = (x - m) / sigma;
  return std::exp(-0.5 * z * z);
}

Type2Params detector_params(const WindowView& w, double epsilon) {
  require_window(w);
  if (!(epsilon > 1.0)) throw std::invalid_argument("epsilon must exceed 1");

  std::vector<double> sorted = w.values;
  std::sort(sorted.begin(), sorted.end());

  Type2Params p;
  p.means = all_k_middle_means(sorted);
  p.nu = anchored_mean(p.means, p.means.front());

  std::vector<double> deviations;
  deviations.reserve(sorted.size());
  for (double v : sorted) deviations.push_back(epsilon * std::abs(v - p.nu));
  std::sort(deviations.begin(), deviations.end());
  p.sigmas = all_k_middle_means(deviations);
  p.sigma_bar = anchored_mean(p.sigmas, p.sigmas.front());

  // min_element/max_element return the first extremum, i.e. ties go to the smaller k.
  p.k_lo = static_cast<std::size_t>(std::min_element(p.means.begin(), p.means.end()) - p.means.begin());
  p.k_hi = static_cast<std::size_t>(std::max_element(p.means.begin(), p.means.end()) - p.means.begin());
  return p;
}

Envelope umf_lmf(const Type2Params& params, double x) noexcept {
  const double lo = params.m_lo();
  const double hi = params.m_hi();
  const double width = params.sigma_bar;

  Envelope e;
  if (x < lo) {
    e.upper = gmf(x, lo, width);
  } else if (x > hi) {
    e.upper = gmf(x, hi, width);
  } else {
    for (double m : params.means) e.upper = std::max(e.upper, gmf(x, m, width));
  }
  e.lower = (x <= 0.5 * (lo + hi)) ? gmf(x, hi, width) : gmf(x, lo, width);
  return e;
}

MembershipMatrix membership_matrix(const Type2Params& params, const WindowView& w) {
  MembershipMatrix mu;
  mu.upper.reserve(w.values.size());
  mu.lower.reserve(w.values.size());
  for (double v : w.values) {
    const Envelope e = umf_lmf(params, v);
    mu.upper.push_back(e.upper);
    mu.lower.push_back(e.lower);
  }
  return mu;
}

Thresholds thresholds(const MembershipMatrix& mu) {
  if (mu.upper.empty() || mu.upper.size() != mu.lower.size()) {
    throw std::invalid_argument("membership matrix must be non-empty with two equal rows");
  }
  Thresholds t;
  for (std::size_t n = 0; n < mu.upper.size(); ++n) {
    t.t_high = std::max({t.t_high, mu.upper[n], mu.lower[n]});
    t.t_low = std::max(t.t_low, std::min(mu.upper[n], mu.lower[n]));
  }
  return t;
}

FuzzyFlag fuzzy_flag(double mald, const Thresholds& t) noexcept {
  if (t.t_high <= t.t_low) return {t.t_high};
  if (mald <= t.t_low) return {t.t_low};
  if (mald >= t.t_high) return {t.t_high};
  return {(mald - t.t_low) / (t.t_high - t.t_low)};
}

}  // namespace at2ff
