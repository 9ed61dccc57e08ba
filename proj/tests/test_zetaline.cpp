#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "oracles.hpp"
#include "szeta/errors.hpp"
#include "szeta/primes.hpp"
#include "szeta/zetaline.hpp"

using namespace szeta;

TEST_CASE("rs_theta against the exact log-Gamma definition") {
  for (double t : {10.0, 31.4, 100.0, 1234.5, 1e4, 1e6}) {
    const double exact = (double)oracles::theta_exact(t);
    CHECK(std::abs(rs_theta(t) - exact) < 1e-9);
  }
  // the t^-1 correction term is visible at t = 1e4
  const double t = 1e4;
  const double main3 = 0.5 * t * std::log(t / (2.0 * M_PI)) - 0.5 * t - M_PI / 8.0;
  CHECK(std::abs(((double)oracles::theta_exact(t) - main3) - 1.0 / (48.0 * t)) < 1e-8);
  CHECK_THROWS_AS(rs_theta(5.0), DomainError);
}

TEST_CASE("rs_theta monotone with the expected derivative") {
  double prev = rs_theta(20.0);
  for (double t = 20.5; t <= 200.0; t += 0.5) {
    const double cur = rs_theta(t);
    CHECK(cur > prev);
    prev = cur;
  }
  const double t = 1e5, h = 1e-3;
  const double fd = (rs_theta(t + h) - rs_theta(t - h)) / (2.0 * h);
  CHECK(std::abs(fd - 0.5 * std::log(t / (2.0 * M_PI))) < 1e-3);
  CHECK(std::abs(rs_theta_deriv(t) - fd) < 1e-6);
}

TEST_CASE("zeta_em anchors") {
  CHECK(zeta_em(0.0).real() == doctest::Approx(-1.4603545088).epsilon(1e-10));
  CHECK(std::abs(zeta_em(14.134725141734693)) < 1e-9);
  CHECK_THROWS_AS(zeta_em(-1.0), DomainError);
  CHECK_THROWS_AS(zeta_em(3e5), DomainError);
}

TEST_CASE("|Z(t)| equals |zeta(1/2+it)| on sampled heights") {
  for (int i = 0; i < 50; ++i) {
    const double t = 20.0 + i * (1e4 - 20.0) / 49.0;
    const double z = hardy_z(t);
    const double ref = std::abs(zeta_em(t));
    CHECK(std::abs(std::abs(z) - ref) <= 1e-6 * std::max(1.0, ref));
  }
}

TEST_CASE("riemann-siegel corrections: anchor and converging error") {
  double c[5];
  detail::rs_correction_coeffs(0.5, c);
  CHECK(c[0] == doctest::Approx(std::sin(M_PI / 8.0)).epsilon(1e-12));  // Psi(1/2)
  CHECK(std::abs(c[1]) < 1e-12);                                        // odd about 1/2
  CHECK(std::abs(c[3]) < 1e-12);
  // each extra term shrinks the deviation from the Euler-Maclaurin engine
  for (double t : {1000.0, 20000.0}) {
    const double theta = rs_theta(t);
    const auto z = zeta_em(t);
    const double zem = std::cos(theta) * z.real() - std::sin(theta) * z.imag();
    double prev = 1.0;
    for (int terms = 1; terms <= 4; ++terms) {
      ZOptions o;
      o.em_below = 10.0;
      o.rs_terms = terms;
      const double err = std::abs(hardy_z(t, o) - zem);
      CHECK(err < prev);
      prev = err;
    }
    ZOptions o5;
    o5.em_below = 10.0;
    CHECK(std::abs(hardy_z(t, o5) - zem) < 1e-9);
  }
}

TEST_CASE("Z is smooth: finite-difference second derivative bounded on [100, 101]") {
  const double h = 1e-3;
  double worst = 0.0;
  for (double t = 100.0; t <= 101.0; t += 0.05) {
    const double d2 = (hardy_z(t + h) - 2.0 * hardy_z(t) + hardy_z(t - h)) / (h * h);
    worst = std::max(worst, std::abs(d2));
  }
  CHECK(worst < 50.0);
}

TEST_CASE("Z changes sign across the first zero") {
  CHECK(hardy_z(14.0) * hardy_z(14.2) < 0.0);
  const double g1 = oracles::bisect([](double t) { return hardy_z(t); }, 14.0, 14.2);
  CHECK(g1 == doctest::Approx(14.134725).epsilon(1e-6));
  CHECK_THROWS_AS(hardy_z(5.0), DomainError);
}

TEST_CASE("zero scan to 100: the 29 anchors") {
  auto cache = count_zeros(100.0);
  REQUIRE(cache.gammas.size() == 29);
  CHECK(cache.warnings.empty());
  CHECK(cache.gammas[0] == doctest::Approx(14.134725).epsilon(1e-6));
  CHECK(cache.gammas[1] == doctest::Approx(21.022040).epsilon(1e-6));
  CHECK(cache.gammas[2] == doctest::Approx(25.010858).epsilon(1e-6));
  for (std::size_t i = 1; i < cache.gammas.size(); ++i)
    CHECK(cache.gammas[i] > cache.gammas[i - 1]);
  // round trip: every cached gamma is bracketed by a sign change of Z
  for (double g : cache.gammas)
    CHECK(hardy_z(g - 1e-4) * hardy_z(g + 1e-4) < 0.0);
  CHECK(cache.count_below(100.0) == 29);
  CHECK(cache.count_below(14.0) == 0);
}

TEST_CASE("parallel scan equals serial scan bit for bit") {
  auto serial = count_zeros(500.0, 0.05, 1);
  auto par = count_zeros(500.0, 0.05, 4);
  REQUIRE(serial.gammas.size() == par.gammas.size());
  for (std::size_t i = 0; i < serial.gammas.size(); ++i)
    CHECK(serial.gammas[i] == par.gammas[i]);
}

TEST_CASE("S(t): jumps at zeros, slope between zeros, integer identity") {
  auto cache = count_zeros(200.0);
  const double g1 = cache.gammas[0];
  CHECK(s_of_t(cache, g1 + 0.01) - s_of_t(cache, g1 - 0.01) ==
        doctest::Approx(1.0).epsilon(0.02));
  // between zeros S' = -(1/2pi) log(t/2pi) up to O(t^-2)
  const double t0 = 100.0, h = 1e-4;
  const double slope = (s_of_t(cache, t0 + h) - s_of_t(cache, t0 - h)) / (2.0 * h);
  CHECK(slope == doctest::Approx(-std::log(t0 / (2.0 * M_PI)) / (2.0 * M_PI)).epsilon(0.05));
  // S + theta/pi + 1 = N(t), an integer, constant between zeros
  for (double t : {15.0, 50.3, 99.9, 151.2}) {
    const double n = s_of_t(cache, t) + rs_theta(t) / M_PI + 1.0;
    CHECK(n == doctest::Approx(std::round(n)).epsilon(1e-9));
    CHECK((std::size_t)std::llround(n) == cache.count_below(t));
  }
  CHECK_THROWS_AS(s_of_t(cache, 250.0), DomainError);
}

TEST_CASE("s jumps are within 0.02 of a positive integer at every cached zero <= 1e4") {
  auto cache = count_zeros(10000.0, 0.05, 4);
  for (double g : cache.gammas) {
    const double jump = s_of_t(cache, g + 5e-3) - s_of_t(cache, g - 5e-3);
    CHECK(jump > 0.0);
    CHECK(std::abs(jump - std::round(jump)) < 0.02);
    CHECK(std::round(jump) >= 1.0);
  }
  // continuity between steps: sampled modulus of continuity at dt = 1e-3
  const double a = cache.gammas[100], b = cache.gammas[101];
  const double bound = 1.5 * rs_theta_deriv(a) / M_PI * 1e-3;
  for (double t = a + 1e-3; t + 2e-3 < b; t += 1e-3)
    CHECK(std::abs(s_of_t(cache, t + 1e-3) - s_of_t(cache, t)) <= bound);
}

TEST_CASE("window statistics on [100, 600]") {
  auto cache = count_zeros(700.0);
  auto stats = s_window_stats(cache, 100.0, 500.0, 0.01);
  CHECK(stats.positive_measure >= 0.0);
  CHECK(stats.positive_measure <= 500.0);
  // compare positive measure against dense sampling
  std::size_t pos = 0, n = 0;
  for (double t = 100.0; t < 600.0; t += 0.002, ++n)
    if (s_of_t(cache, t) > 0.0) ++pos;
  CHECK(stats.positive_measure ==
        doctest::Approx(500.0 * (double)pos / (double)n).epsilon(0.02));
  // second moment against dense sampling
  double acc = 0.0;
  n = 0;
  for (double t = 100.0; t < 600.0; t += 0.002, ++n) acc += std::pow(s_of_t(cache, t), 2);
  CHECK(stats.moment2 == doctest::Approx(acc / (double)n).epsilon(0.01));
  // histogram mass accounts for every sample
  double mass = 0.0;
  for (double m : stats.bin_mass) mass += m;
  CHECK(mass <= 500.0 + 1e-9);
  CHECK(mass == doctest::Approx(std::floor(500.0 / 0.01) * 0.01).epsilon(1e-12));
  // threaded histogram identical
  auto stats4 = s_window_stats(cache, 100.0, 500.0, 0.01, 4);
  CHECK(stats4.bin_mass == stats.bin_mass);
  CHECK(stats4.positive_measure == stats.positive_measure);
  CHECK_THROWS_AS(s_window_stats(cache, 100.0, 1000.0, 0.01), DomainError);
}

TEST_CASE("joint moment: positivity, growth sanity, bound") {
  auto cache = count_zeros(1200.0);
  auto table = PrimeTable::sieve(2);
  for (int m = 1; m <= 3; ++m) {
    const double v = joint_moment(cache, table, 1000.0, 100.0, m);
    CHECK(v >= 0.0);
    CHECK(std::isfinite(v));
    CHECK(v <= joint_moment_bound(100.0, m, 1e-3));
  }
  CHECK_THROWS_AS(joint_moment(cache, table, 1000.0, 100.0, 0), DomainError);
}

TEST_CASE("zero cache persistence and extension") {
  namespace fs = std::filesystem;
  auto path = (fs::temp_directory_path() / "szeta_zeros_test.txt").string();
  auto cache = count_zeros(300.0);
  cache.save(path);
  auto loaded = ZeroCache::load(path);
  CHECK(loaded.upper == cache.upper);
  CHECK(loaded.gammas == cache.gammas);

  extend_zeros(loaded, 500.0);
  auto full = count_zeros(500.0);
  REQUIRE(loaded.gammas.size() == full.gammas.size());
  for (std::size_t i = 0; i < full.gammas.size(); ++i)
    CHECK(loaded.gammas[i] == doctest::Approx(full.gammas[i]).epsilon(1e-7));
}
