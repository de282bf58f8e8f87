#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <random>

#include "at2ff/type2_detector.hpp"
#include "oracles.hpp"

using namespace at2ff;

namespace {

WindowView make_window(std::vector<double> values, std::size_t center_index = 0) {
  WindowView w;
  w.center_value = values.at(center_index);
  w.values = std::move(values);
  return w;
}

// Window of 2..25 pixels drawn from the 8-bit grid, with a share of 0/1 impulses.
WindowView random_window(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 24;
  std::vector<double> v(n);
  const double impulse = (rng() % 100) / 100.0;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& x : v) {
    if (u(rng) < impulse) {
      x = (rng() % 2) ? 1.0 : 0.0;
    } else {
      x = static_cast<double>(rng() % 256) / 255.0;
    }
  }
  return make_window(v, rng() % n);
}

}  // namespace

TEST_CASE("mean_of_k_middle worked examples") {
  const std::vector<double> odd{1, 2, 3, 4, 10};
  CHECK(mean_of_k_middle(odd, 1) == 3.0);
  CHECK(oracle::k_middle(odd, 3) == doctest::Approx(4.0));
  CHECK(mean_of_k_middle(odd, 3) == doctest::Approx(4.0).epsilon(1e-15));
  const std::vector<double> even{1, 2, 3, 4};
  CHECK(oracle::k_middle(even, 1) == doctest::Approx(2.5));
  CHECK(mean_of_k_middle(even, 1) == 2.5);
  CHECK(mean_of_k_middle(even, 2) == 2.5);
}

TEST_CASE("mean_of_k_middle rejects bad arguments") {
  const std::vector<double> v{1, 2, 3};
  CHECK_THROWS_AS(mean_of_k_middle(v, 0), std::invalid_argument);
  CHECK_THROWS_AS(mean_of_k_middle(v, 3), std::invalid_argument);
  CHECK_THROWS_AS(mean_of_k_middle(std::vector<double>{}, 1), std::invalid_argument);
  CHECK(middle_count(9) == 5);
  CHECK(middle_count(4) == 2);
}

TEST_CASE("mean_of_k_middle matches brute-force oracle") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> v(1 + rng() % 25);
    for (auto& x : v) x = u(rng);
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    const auto all = all_k_middle_means(sorted);
    for (std::size_t k = 1; k <= middle_count(v.size()); ++k) {
      const double expected = static_cast<double>(oracle::k_middle(v, k));
      CHECK(std::abs(mean_of_k_middle(sorted, k) - expected) <= 1e-12);
      CHECK(all[k - 1] == mean_of_k_middle(sorted, k));
    }
  }
}

TEST_CASE("m_ald") {
  CHECK(m_ald(make_window({0.3, 0.3, 0.3})) == 0.0);
  CHECK(m_ald(make_window({0.0, 0.5, 0.5, 0.5})) == 0.5);
  CHECK(m_ald(make_window({1.0, 0.2, 0.9, 1.0, 0.4})) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK_THROWS_AS(m_ald(make_window({0.5})), std::invalid_argument);
}

TEST_CASE("gmf") {
  CHECK(gmf(0.4, 0.4, 0.1) == 1.0);
  CHECK(gmf(0.5, 0.4, 0.1) == doctest::Approx(0.6065306597126334));
  CHECK(gmf(0.6, 0.4, 0.1) == doctest::Approx(0.1353352832366127));
  CHECK(gmf(0.3, 0.3, 0.0) == 1.0);
  CHECK(gmf(0.3, 0.31, 0.0) == 0.0);
}

TEST_CASE("detector_params on a constant window") {
  const Type2Params p = detector_params(make_window(std::vector<double>(9, 0.3)), 1.2);
  REQUIRE(p.means.size() == 5);
  for (double m : p.means) CHECK(m == 0.3);
  for (double s : p.sigmas) CHECK(s == 0.0);
  CHECK(p.nu == 0.3);
  CHECK(p.sigma_bar == 0.0);
  CHECK(p.k_lo == 0);
  CHECK(p.k_hi == 0);
}

TEST_CASE("detector_params worked example") {
  const std::vector<double> v{0, 0, 0.4, 0.6, 1};
  const Type2Params p = detector_params(make_window(v), 1.2);
  REQUIRE(p.means.size() == 3);
  CHECK(p.means[0] == doctest::Approx(0.4).epsilon(1e-14));
  CHECK(p.means[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(p.means[2] == doctest::Approx(0.4).epsilon(1e-14));
  for (std::size_t k = 1; k <= 3; ++k) {
    CHECK(p.means[k - 1] == doctest::Approx(static_cast<double>(oracle::k_middle(v, k))).epsilon(1e-14));
  }
  const double nu = (0.4 + 1.0 / 3.0 + 0.4) / 3.0;
  CHECK(p.nu == doctest::Approx(nu).epsilon(1e-14));

  std::vector<double> dev;
  for (double x : v) dev.push_back(1.2 * std::abs(x - nu));
  double sigma_bar = 0;
  for (std::size_t k = 1; k <= 3; ++k) {
    const double s = static_cast<double>(oracle::k_middle(dev, k));
    CHECK(p.sigmas[k - 1] == doctest::Approx(s).epsilon(1e-13));
    sigma_bar += s / 3.0;
  }
  CHECK(p.sigma_bar == doctest::Approx(sigma_bar).epsilon(1e-13));
  CHECK(p.k_lo == 1);
  CHECK(p.m_hi() == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("extreme-mean ties resolve to the smaller k") {
  // Sorted {0.1, 0.2, 0.5, 0.8, 0.9}: every k-middle mean is exactly 0.5.
  const Type2Params p = detector_params(make_window({0.5, 0.2, 0.8, 0.1, 0.9}), 1.2);
  CHECK(p.k_lo == 0);
  CHECK(p.k_hi == 0);
}

TEST_CASE("detector_params validates input") {
  CHECK_THROWS_AS(detector_params(make_window({0.5}), 1.2), std::invalid_argument);
  CHECK_THROWS_AS(detector_params(make_window({0.5, 0.2}), 1.0), std::invalid_argument);
}

TEST_CASE("umf_lmf") {
  SUBCASE("collapsed footprint is type-1") {
    Type2Params p;
    p.means = {0.4, 0.4, 0.4};
    p.sigma_bar = 0.1;
    for (double x = 0; x <= 1.0; x += 0.05) {
      const Envelope e = umf_lmf(p, x);
      CHECK(e.upper == doctest::Approx(gmf(x, 0.4, 0.1)));
      CHECK(e.lower == doctest::Approx(gmf(x, 0.4, 0.1)));
    }
  }
  SUBCASE("peak and midpoint symmetry") {
    Type2Params p;
    p.means = {0.5, 0.3, 0.45, 0.6};
    p.k_lo = 1;
    p.k_hi = 3;
    p.sigma_bar = 0.08;
    CHECK(umf_lmf(p, 0.3).upper == 1.0);
    const double mid = 0.45;
    const Envelope e = umf_lmf(p, mid);
    CHECK(e.lower == doctest::Approx(gmf(mid, 0.6, 0.08)));
    CHECK(e.lower == doctest::Approx(gmf(mid, 0.3, 0.08)));
    CHECK(e.upper == 1.0);  // 0.45 is itself one of the means
    CHECK(umf_lmf(p, 0.1).upper == doctest::Approx(gmf(0.1, 0.3, 0.08)));
    CHECK(umf_lmf(p, 0.9).upper == doctest::Approx(gmf(0.9, 0.6, 0.08)));
    CHECK(umf_lmf(p, 0.35).lower == doctest::Approx(gmf(0.35, 0.6, 0.08)));
    CHECK(umf_lmf(p, 0.55).lower == doctest::Approx(gmf(0.55, 0.3, 0.08)));
  }
}

TEST_CASE("membership_matrix and thresholds") {
  const WindowView constant = make_window(std::vector<double>(9, 0.7));
  const Type2Params pc = detector_params(constant, 1.2);
  const MembershipMatrix mc = membership_matrix(pc, constant);
  for (std::size_t n = 0; n < 9; ++n) {
    CHECK(mc.upper[n] == 1.0);
    CHECK(mc.lower[n] == 1.0);
  }
  const Thresholds tc = thresholds(mc);
  CHECK(tc.t_high == 1.0);
  CHECK(tc.t_low == 1.0);

  const WindowView two = make_window({0.2, 0.6});
  const MembershipMatrix m2 = membership_matrix(detector_params(two, 1.5), two);
  CHECK(m2.upper.size() == 2);
  CHECK(m2.lower.size() == 2);

  const Thresholds t = thresholds({{0.9, 0.4}, {0.2, 0.3}});
  CHECK(t.t_high == 0.9);
  CHECK(t.t_low == 0.3);
  const Thresholds flat = thresholds({{0.6, 0.6}, {0.6, 0.6}});
  CHECK(flat.t_high == 0.6);
  CHECK(flat.t_low == 0.6);
  CHECK_THROWS_AS(thresholds({}), std::invalid_argument);
}

TEST_CASE("fuzzy_flag cases") {
  const Thresholds t{0.2, 0.8};
  CHECK(fuzzy_flag(0.1, t).value == 0.2);
  CHECK(fuzzy_flag(0.2, t).value == 0.2);
  CHECK(fuzzy_flag(0.5, t).value == doctest::Approx(0.5));
  CHECK(fuzzy_flag(0.8, t).value == 0.8);
  CHECK(fuzzy_flag(3.0, t).value == 0.8);
  CHECK(fuzzy_flag(0.5, {0.4, 0.4}).value == 0.4);
  CHECK(fuzzy_flag(0.0, {1.0, 1.0}).value == 1.0);
}

TEST_CASE("detector properties on random windows") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const WindowView w = random_window(rng);
    const Type2Params p = detector_params(w, 1.2);
    const auto [vmin, vmax] = std::minmax_element(w.values.begin(), w.values.end());
    CHECK(p.means.size() == middle_count(w.values.size()));
    for (double m : p.means) {
      CHECK(m >= *vmin - 1e-15);
      CHECK(m <= *vmax + 1e-15);
    }
    for (double s : p.sigmas) CHECK(s >= 0.0);
    CHECK(p.m_lo() <= p.m_hi());

    // Envelope containment on the 8-bit grid.
    for (int raw = 0; raw <= 255; ++raw) {
      const Envelope e = umf_lmf(p, raw / 255.0);
      CHECK(e.lower <= e.upper);
      CHECK(e.lower >= 0.0);
      CHECK(e.upper <= 1.0);
    }

    const Thresholds t = thresholds(membership_matrix(p, w));
    CHECK(t.t_low <= t.t_high);
    const double mald = m_ald(w);
    const double f = fuzzy_flag(mald, t).value;
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);

    // Permutation invariance.
    WindowView shuffled = w;
    std::shuffle(shuffled.values.begin(), shuffled.values.end(), rng);
    const Type2Params q = detector_params(shuffled, 1.2);
    CHECK(q.means == p.means);
    CHECK(q.sigmas == p.sigmas);
    CHECK(q.nu == p.nu);
    CHECK(q.sigma_bar == p.sigma_bar);
  }
}

TEST_CASE("flag is non-decreasing on the ramp") {
  const Thresholds t{0.15, 0.9};
  double prev = fuzzy_flag(0.1501, t).value;
  for (double m = 0.151; m < 0.9; m += 0.001) {
    const double f = fuzzy_flag(m, t).value;
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("shifting a window moves the means and keeps the spreads") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 0.6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(2 + rng() % 24);
    for (auto& x : v) x = u(rng);
    const double c = 0.3;
    std::vector<double> shifted = v;
    for (auto& x : shifted) x += c;
    const Type2Params a = detector_params(make_window(v), 1.3);
    const Type2Params b = detector_params(make_window(shifted), 1.3);
    for (std::size_t k = 0; k < a.means.size(); ++k) {
      CHECK(b.means[k] == doctest::Approx(a.means[k] + c).epsilon(1e-12));
      CHECK(std::abs(b.sigmas[k] - a.sigmas[k]) <= 1e-12);
    }
    CHECK(b.nu == doctest::Approx(a.nu + c).epsilon(1e-12));
  }
}
