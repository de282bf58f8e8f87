#ifndef AT2FF_METRICS_HPP
#define AT2FF_METRICS_HPP

#include <string>

#include "at2ff/image.hpp"

namespace at2ff {

/// Mean squared error over all pixels. Throws std::invalid_argument on a
/// dimension mismatch.
double mse(const GrayImage& reference, const GrayImage& test);

/// 10 log10(255^2 / MSE) in dB; +infinity for identical images.
double psnr(const GrayImage& reference, const GrayImage& test);

/// Two decimals, or "inf".
std::string format_psnr(double db);

}  // namespace at2ff

#endif  // AT2FF_METRICS_HPP
