#ifndef AT2FF_BENCHMARK_HPP
#define AT2FF_BENCHMARK_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "at2ff/fuzzy_denoiser.hpp"
#include "at2ff/image.hpp"

namespace at2ff {

enum class FilterKind { At2ff, Median, TruncatedMedian };

/// "at2ff", "mf" or "tmf". Throws std::invalid_argument otherwise.
FilterKind parse_filter(std::string_view name);
std::string_view filter_name(FilterKind kind) noexcept;

/// Baselines always run with a 3x3 window.
GrayImage apply_filter(FilterKind kind, const GrayImage& img, const DenoiseConfig& cfg, unsigned threads = 1);

struct NamedImage {
  std::string name;
  GrayImage image;
};

struct LoadedImages {
  std::vector<NamedImage> images;
  /// One "path: reason" line per file that could not be decoded.
  std::vector<std::string> failures;
};

/// Loads every *.pgm file of `dir` in filename order; undecodable files are
/// recorded in `failures` instead of aborting.
LoadedImages load_pgm_directory(const std::filesystem::path& dir);

struct BenchRecord {
  std::string image_name;
  std::string filter_name;
  double density_pct = 0.0;
  std::uint64_t seed = 0;
  double psnr_db = 0.0;
  /// Wall-clock seconds of the filter call alone.
  double time_s = 0.0;
};

struct BenchPlan {
  std::vector<double> densities_pct;
  std::vector<FilterKind> filters;
  std::vector<std::uint64_t> seeds;
  double salt_ratio = 0.5;
  DenoiseConfig config;
  unsigned threads = 1;
};

/// For each (image, density, seed) the clean image is corrupted once and every
/// filter runs on that same noisy image. Records come out in
/// (image, density, seed, filter) order.
std::vector<BenchRecord> run_benchmark(const std::vector<NamedImage>& images, const BenchPlan& plan);

/// Header "image,filter,density_pct,seed,psnr_db,time_s", '\n' line endings.
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::string bench_csv(const std::vector<BenchRecord>& records);

/// Mean PSNR per (filter, density), one row per filter.
void write_summary(std::ostream& out, const std::vector<BenchRecord>& records);

/// Shortest decimal form of a density percentage: 10, 12.5, ...
std::string format_density(double pct);

}  // namespace at2ff

#endif  // AT2FF_BENCHMARK_HPP
