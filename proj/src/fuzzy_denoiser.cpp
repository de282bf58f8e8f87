#include "at2ff/fuzzy_denoiser.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"

namespace at2ff {

void DenoiseConfig::validate() const {
  if (!(epsilon > 1.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be a finite value > 1");
  if (f_max < 1) throw std::invalid_argument("f_max must be >= 1");
  if (f_init && (*f_init < 1 || *f_init > f_max)) throw std::invalid_argument("f_init must lie in [1, f_max]");
  if (!(tau_hom > 0.0)) throw std::invalid_argument("tau_hom must be positive");
  if (!(density_switch >= 0.0 && density_switch <= 1.0)) throw std::invalid_argument("density_switch must lie in [0, 1]");
}

GoodPixelSet good_pixels(const WindowView& w) {
  GoodPixelSet g;
  for (double v : w.values) {
    if (v != 0.0 && v != 1.0) g.values.push_back(v);
  }
  return g;
}

GoodStats good_stats(const GoodPixelSet& g, double epsilon) {
  if (g.empty()) throw std::invalid_argument("good_stats: empty good-pixel set");
  const double n = static_cast<double>(g.size());
  const double anchor = g.values.front();
  double sum = 0.0;
  for (double v : g.values) sum += v - anchor;

  GoodStats s;
  s.nu = anchor + sum / n;
  double spread = 0.0;
  for (double v : g.values) spread += epsilon * std::abs(v - s.nu);
  s.sigma = spread / n;
  return s;
}

std::vector<double> weights(const GoodPixelSet& g, const GoodStats& s) {
  std::vector<double> w;
  w.reserve(g.size());
  for (double v : g.values) {
    if (s.sigma <= 0.0) {
      w.push_back(1.0);
    } else {
      const double z = (v - s.nu) / s.sigma;
      w.push_back(std::exp(-0.5 * z * z));
    }
  }
  return w;
}

double weighted_mean(const GoodPixelSet& g, const std::vector<double>& w) {
  if (g.empty() || g.size() != w.size()) throw std::invalid_argument("weighted_mean: size mismatch or empty set");
  double total = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    total += w[i];
    acc += w[i] * g.values[i];
  }
  if (!(total > 0.0)) throw std::invalid_argument("weighted_mean: total weight is zero");
  const auto [lo, hi] = std::minmax_element(g.values.begin(), g.values.end());
  return std::clamp(acc / total, *lo, *hi);
}

double estimate_noise_density(const GrayImage& img) {
  const auto px = img.pixels();
  const auto extremes = std::count_if(px.begin(), px.end(), [](std::uint8_t v) { return v == 0 || v == 255; });
  return static_cast<double>(extremes) / static_cast<double>(px.size());
}

int initial_half_size(const GrayImage& img, const DenoiseConfig& cfg) {
  const int start = cfg.f_init ? *cfg.f_init : (estimate_noise_density(img) <= cfg.density_switch ? 1 : 2);
  return std::min(start, cfg.f_max);
}

std::uint8_t denoise_pixel(const GrayImage& img, std::size_t row, std::size_t col, const DenoiseConfig& cfg) {
  return denoise_pixel(img, row, col, cfg, initial_half_size(img, cfg));
}

PixelDecision explain_pixel(const GrayImage& img, std::size_t row, std::size_t col, const DenoiseConfig& cfg,
                            int start_half_size) {
  const std::uint8_t raw = img.at(row, col);
  PixelDecision d{raw, PixelPath::NotExtreme, 0, 0};
  if (raw != 0 && raw != 255) return d;

  std::optional<double> fallback;
  for (int f = std::max(start_half_size, 1); f <= cfg.f_max; ++f) {
    ++d.iterations;
    d.half_size = f;
    const WindowView w = window(img, row, col, f);
    // A single-pixel image has no neighbours at any window size.
    if (w.values.size() < 2) continue;

    const Type2Params params = detector_params(w, cfg.epsilon);
    const Thresholds t = thresholds(membership_matrix(params, w));
    const double mald = cfg.mald_scale == MaldScale::Raw8Bit ? 255.0 * m_ald(w) : m_ald(w);
    const FuzzyFlag flag = fuzzy_flag(mald, t);

    const Envelope at_center = umf_lmf(params, w.center_value);
    if (0.5 * (at_center.upper + at_center.lower) >= t.t_high) {
      d.path = PixelPath::RetainedByEnvelope;
      return d;
    }
    if (params.sigma_bar <= cfg.tau_hom) {
      d.value = denormalize(params.nu);
      d.path = PixelPath::Homogeneous;
      return d;
    }

    const GoodPixelSet good = good_pixels(w);
    if (good.empty()) {
      fallback = params.nu;
      continue;
    }
    const double p_new = weighted_mean(good, weights(good, good_stats(good, cfg.epsilon)));
    d.value = denormalize(blend(w.center_value, p_new, flag));
    d.path = PixelPath::Blended;
    return d;
  }
  d.path = PixelPath::Fallback;
  if (fallback) d.value = denormalize(*fallback);
  return d;
}

std::uint8_t denoise_pixel(const GrayImage& img, std::size_t row, std::size_t col, const DenoiseConfig& cfg,
                           int start_half_size) {
  return explain_pixel(img, row, col, cfg, start_half_size).value;
}

GrayImage denoise_image(const GrayImage& img, const DenoiseConfig& cfg, unsigned threads) {
  cfg.validate();
  const int start = initial_half_size(img, cfg);
  std::vector<std::uint8_t> out(img.pixels().begin(), img.pixels().end());
  detail::for_each_row(img.height(), threads, [&](std::size_t r) {
    for (std::size_t c = 0; c < img.width(); ++c) {
      out[r * img.width() + c] = denoise_pixel(img, r, c, cfg, start);
    }
  });
  return GrayImage(img.width(), img.height(), std::move(out));
}

}  // namespace at2ff
