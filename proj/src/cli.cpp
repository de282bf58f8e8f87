#include "at2ff/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "at2ff/benchmark.hpp"
#include "at2ff/metrics.hpp"
#include "at2ff/noise.hpp"
#include "at2ff/pgm.hpp"
#include "atomic_file.hpp"

namespace at2ff::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("invalid seed '" + std::string(s) + "'");
  }
  return v;
}

// Reported as a validation failure (exit 1).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DenoiseFlags {
  std::string f_init = "auto";
  std::string mald_scale = "raw";
  DenoiseConfig config;
  unsigned threads = 1;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--epsilon", config.epsilon, "Deviation multiplier (> 1)")->capture_default_str();
    cmd.add_option("--f-init", f_init, "Initial half window: auto, 1 or 2")
        ->check(CLI::IsMember({"auto", "1", "2"}))
        ->capture_default_str();
    cmd.add_option("--f-max", config.f_max, "Maximum half window")->check(CLI::PositiveNumber)->capture_default_str();
    cmd.add_option("--tau-hom", config.tau_hom, "Homogeneity tolerance (normalized units)")->capture_default_str();
    cmd.add_option("--density-switch", config.density_switch, "Estimated density above which auto starts at F=2")
        ->capture_default_str();
    cmd.add_option("--mald-scale", mald_scale, "Luminance-difference scale for the fuzzy flag: raw or normalized")
        ->check(CLI::IsMember({"raw", "normalized"}))
        ->capture_default_str();
    cmd.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  }

  DenoiseConfig resolved() const {
    DenoiseConfig cfg = config;
    if (f_init != "auto") cfg.f_init = std::stoi(f_init);
    cfg.mald_scale = mald_scale == "normalized" ? MaldScale::Normalized : MaldScale::Raw8Bit;
    try {
      cfg.validate();
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    return cfg;
  }
};

GrayImage load(const std::string& path) { return read_pgm_file(path); }

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  std::vector<std::uint64_t> seeds;
  for (auto token : split(text, ',')) {
    token = trim(token);
    const auto dots = token.find("..");
    if (dots == std::string_view::npos) {
      seeds.push_back(parse_u64(token));
      continue;
    }
    const std::uint64_t lo = parse_u64(token.substr(0, dots));
    const std::uint64_t hi = parse_u64(token.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty seed range '" + std::string(token) + "'");
    if (hi - lo >= 1'000'000) throw std::invalid_argument("seed range too large");
    for (std::uint64_t s = lo;; ++s) {
      seeds.push_back(s);
      if (s == hi) break;
    }
  }
  return seeds;
}

std::vector<double> parse_percent_list(std::string_view text) {
  std::vector<double> out;
  for (auto token : split(text, ',')) {
    token = trim(token);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("invalid percentage '" + std::string(token) + "'");
    }
    if (!(v >= 0.0 && v <= 100.0)) throw std::invalid_argument("percentage " + std::string(token) + " outside [0, 100]");
    out.push_back(v);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Salt-and-pepper denoising with an adaptive interval type-2 fuzzy filter", "at2ff"};
  app.require_subcommand(1);

  // add-noise
  std::string in_path, out_path;
  NoiseSpec noise{0.0, 0, 0.5};
  auto* add_noise = app.add_subcommand("add-noise", "Corrupt a PGM with seeded salt-and-pepper noise");
  add_noise->add_option("input", in_path, "Input PGM")->required();
  add_noise->add_option("output", out_path, "Output PGM")->required();
  add_noise->add_option("--density", noise.density, "Corruption probability in [0, 1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  add_noise->add_option("--seed", noise.seed, "Noise seed")->capture_default_str();
  add_noise->add_option("--salt-ratio", noise.salt_ratio, "Fraction of corrupted pixels set to 255")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  // denoise
  std::string filter = "at2ff";
  DenoiseFlags denoise_flags;
  auto* denoise = app.add_subcommand("denoise", "Filter a PGM");
  denoise->add_option("input", in_path, "Input PGM")->required();
  denoise->add_option("output", out_path, "Output PGM")->required();
  denoise->add_option("--filter", filter, "at2ff, mf or tmf")
      ->check(CLI::IsMember({"at2ff", "mf", "tmf"}))
      ->capture_default_str();
  denoise_flags.add_to(*denoise);

  // psnr
  std::string ref_path, test_path;
  auto* psnr_cmd = app.add_subcommand("psnr", "PSNR of a test PGM against a reference");
  psnr_cmd->add_option("reference", ref_path, "Reference PGM")->required();
  psnr_cmd->add_option("test", test_path, "Test PGM")->required();

  // bench
  std::string images_dir, densities_text = "10,30,50,70,90", filters_text = "at2ff,mf,tmf", seeds_text = "1",
                          csv_path;
  double bench_salt_ratio = 0.5;
  DenoiseFlags bench_flags;
  auto* bench = app.add_subcommand("bench", "Noise sweep over a directory of PGM images, CSV output");
  bench->add_option("--images", images_dir, "Directory of clean PGM images")->required();
  bench->add_option("--densities", densities_text, "Comma list of noise percentages")->capture_default_str();
  bench->add_option("--filters", filters_text, "Comma list of filters")->capture_default_str();
  bench->add_option("--seeds", seeds_text, "Seeds: 1,2,3 or 1..5")->capture_default_str();
  bench->add_option("--out", csv_path, "Output CSV path")->required();
  bench->add_option("--salt-ratio", bench_salt_ratio, "Fraction of corrupted pixels set to 255")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  bench_flags.add_to(*bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidationError;
  }

  try {
    if (*add_noise) {
      const GrayImage img = load(in_path);
      const GrayImage noisy = inject_sap(img, noise);
      write_pgm_file(out_path, noisy);
      char buf[64];
      std::snprintf(buf, sizeof buf, "corrupted fraction: %.6f\n",
                    static_cast<double>(sap_selected_count(noise, img.size())) / static_cast<double>(img.size()));
      out << buf;
    } else if (*denoise) {
      const DenoiseConfig cfg = denoise_flags.resolved();
      const FilterKind kind = parse_filter(filter);
      const GrayImage img = load(in_path);
      const auto t0 = std::chrono::steady_clock::now();
      const GrayImage result = apply_filter(kind, img, cfg, denoise_flags.threads);
      const auto t1 = std::chrono::steady_clock::now();
      write_pgm_file(out_path, result);
      char buf[64];
      std::snprintf(buf, sizeof buf, "filter time: %.3f s\n", std::chrono::duration<double>(t1 - t0).count());
      out << buf;
    } else if (*psnr_cmd) {
      const GrayImage ref = load(ref_path);
      const GrayImage test = load(test_path);
      if (ref.width() != test.width() || ref.height() != test.height()) {
        err << "error: image dimensions differ (" << ref.width() << "x" << ref.height() << " vs " << test.width()
            << "x" << test.height() << ")\n";
        return kValidationError;
      }
      out << format_psnr(psnr(ref, test)) << '\n';
    } else if (*bench) {
      BenchPlan plan;
      try {
        plan.densities_pct = parse_percent_list(densities_text);
        for (auto name : split(filters_text, ',')) plan.filters.push_back(parse_filter(trim(name)));
        plan.seeds = parse_seed_list(seeds_text);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(e.what());
      }
      plan.salt_ratio = bench_salt_ratio;
      plan.config = bench_flags.resolved();
      plan.threads = bench_flags.threads;

      if (!std::filesystem::is_directory(images_dir)) {
        err << "error: " << images_dir << " is not a directory\n";
        return kIoError;
      }
      const LoadedImages loaded = load_pgm_directory(images_dir);
      for (const auto& f : loaded.failures) err << "warning: skipped " << f << '\n';
      if (loaded.images.empty()) {
        err << "error: no readable PGM images in " << images_dir << '\n';
        return kIoError;
      }
      const auto records = run_benchmark(loaded.images, plan);
      detail::write_file_atomic(csv_path, bench_csv(records));
      write_summary(out, records);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kOk;
}

}  // namespace at2ff::cli
