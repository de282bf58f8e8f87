#include "at2ff/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "at2ff/baselines.hpp"
#include "at2ff/metrics.hpp"
#include "at2ff/noise.hpp"
#include "at2ff/pgm.hpp"

namespace at2ff {

FilterKind parse_filter(std::string_view name) {
  if (name == "at2ff") return FilterKind::At2ff;
  if (name == "mf") return FilterKind::Median;
  if (name == "tmf") return FilterKind::TruncatedMedian;
  throw std::invalid_argument("unknown filter '" + std::string(name) + "' (expected at2ff, mf or tmf)");
}

std::string_view filter_name(FilterKind kind) noexcept {
  switch (kind) {
    case FilterKind::At2ff: return "at2ff";
    case FilterKind::Median: return "mf";
    case FilterKind::TruncatedMedian: return "tmf";
  }
  return "?";
}

GrayImage apply_filter(FilterKind kind, const GrayImage& img, const DenoiseConfig& cfg, unsigned threads) {
  switch (kind) {
    case FilterKind::At2ff: return denoise_image(img, cfg, threads);
    case FilterKind::Median: return median_filter(img, 1, threads);
    case FilterKind::TruncatedMedian: return truncated_median_filter(img, 1, threads);
  }
  throw std::logic_error("unhandled filter kind");
}

LoadedImages load_pgm_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    auto ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    if (ext == ".pgm") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());

  LoadedImages loaded;
  for (const auto& p : paths) {
    try {
      loaded.images.push_back({p.stem().string(), read_pgm_file(p)});
    } catch (const std::exception& e) {
      loaded.failures.push_back(p.string() + ": " + e.what());
    }
  }
  return loaded;
}

std::vector<BenchRecord> run_benchmark(const std::vector<NamedImage>& images, const BenchPlan& plan) {
  if (images.empty() || plan.densities_pct.empty() || plan.filters.empty() || plan.seeds.empty()) {
    throw std::invalid_argument("benchmark needs at least one image, density, filter and seed");
  }
  for (double pct : plan.densities_pct) {
    if (!(pct >= 0.0 && pct <= 100.0)) throw std::invalid_argument("densities must lie in [0, 100] percent");
  }
  plan.config.validate();

  std::vector<BenchRecord> records;
  records.reserve(images.size() * plan.densities_pct.size() * plan.seeds.size() * plan.filters.size());
  for (const auto& named : images) {
    for (double pct : plan.densities_pct) {
      for (std::uint64_t seed : plan.seeds) {
        const GrayImage noisy = inject_sap(named.image, {pct / 100.0, seed, plan.salt_ratio});
        for (FilterKind kind : plan.filters) {
          const auto t0 = std::chrono::steady_clock::now();
          const GrayImage restored = apply_filter(kind, noisy, plan.config, plan.threads);
          const auto t1 = std::chrono::steady_clock::now();
          records.push_back({named.name, std::string(filter_name(kind)), pct, seed, psnr(named.image, restored),
                             std::chrono::duration<double>(t1 - t0).count()});
        }
      }
    }
  }
  return records;
}

std::string format_density(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", pct);
  return buf;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "image,filter,density_pct,seed,psnr_db,time_s\n";
  char time_buf[32];
  for (const auto& r : records) {
    std::snprintf(time_buf, sizeof time_buf, "%.3f", r.time_s);
    out << r.image_name << ',' << r.filter_name << ',' << format_density(r.density_pct) << ',' << r.seed << ','
        << format_psnr(r.psnr_db) << ',' << time_buf << '\n';
  }
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  write_bench_csv(os, records);
  return os.str();
}

void write_summary(std::ostream& out, const std::vector<BenchRecord>& records) {
  std::vector<std::string> filters;
  std::vector<double> densities;
  std::map<std::pair<std::string, double>, std::pair<double, int>> acc;
  for (const auto& r : records) {
    if (std::find(filters.begin(), filters.end(), r.filter_name) == filters.end()) filters.push_back(r.filter_name);
    if (std::find(densities.begin(), densities.end(), r.density_pct) == densities.end()) densities.push_back(r.density_pct);
    auto& [sum, n] = acc[{r.filter_name, r.density_pct}];
    sum += r.psnr_db;
    ++n;
  }
  std::sort(densities.begin(), densities.end());

  char cell[32];
  out << "mean PSNR (dB)\n";
  std::snprintf(cell, sizeof cell, "%-8s", "filter");
  out << cell;
  for (double d : densities) {
    std::snprintf(cell, sizeof cell, "%9s", (format_density(d) + "%").c_str());
    out << cell;
  }
  out << '\n';
  for (const auto& f : filters) {
    std::snprintf(cell, sizeof cell, "%-8s", f.c_str());
    out << cell;
    for (double d : densities) {
      const auto it = acc.find({f, d});
      const std::string v = it == acc.end() ? "-" : format_psnr(it->second.first / it->second.second);
      std::snprintf(cell, sizeof cell, "%9s", v.c_str());
      out << cell;
    }
    out << '\n';
  }
}

}  // namespace at2ff
