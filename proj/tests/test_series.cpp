#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "szeta/errors.hpp"
#include "szeta/power_series.hpp"
#include "szeta/primes.hpp"
#include "szeta/series_coeffs.hpp"
#include "szeta/specfun.hpp"

using namespace szeta;

TEST_CASE("power series multiplication is the exact truncated convolution") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a(9), b(9);
    for (auto& v : a) v = u(rng);
    for (auto& v : b) v = u(rng);
    PowerSeries pa(a), pb(b);
    PowerSeries prod = pa * pb;
    for (std::size_t k = 0; k <= 8; ++k) {
      double c = 0.0;
      for (std::size_t i = 0; i <= k; ++i) c += a[i] * b[k - i];
      CHECK(prod[k] == doctest::Approx(c).epsilon(1e-15));
    }
    PowerSeries one = PowerSeries::one(8);
    CHECK((one * pa).coeffs() == pa.coeffs());
    CHECK((pa * one).coeffs() == pa.coeffs());
  }
}

TEST_CASE("varpi coefficients match the exact rational oracle") {
  auto w = varpi_series(8);
  for (int m = 0; m <= 8; ++m) {
    const double exact = (double)oracles::varpi_exact(m);
    CHECK(w[m] == doctest::Approx(exact).epsilon(1e-14));
  }
  CHECK(w[0] == 1.0);
  CHECK(w[1] == 0.0);
  CHECK(w[2] == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(w[3] == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
  CHECK(w[4] == doctest::Approx(-5.0 / 192.0).epsilon(1e-15));
}

TEST_CASE("factorial bound |varpi_n| < 1/n! up to n = 100") {
  auto w = varpi_series(100);
  double inv_fact = 1.0;
  for (int n = 1; n <= 100; ++n) {
    inv_fact /= n;
    CHECK(std::abs(w[n]) < inv_fact);
  }
}

TEST_CASE("Phi coefficients match the sigma_k closed forms") {
  for (std::uint64_t y : {10ull, 1000ull}) {
    auto table = PrimeTable::sieve(y);
    auto phi = phi_series(table, 8);
    const double s2 = table.sigma_k(2), s3 = table.sigma_k(3), s4 = table.sigma_k(4),
                 s5 = table.sigma_k(5);
    CHECK(phi[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(phi[1]) < 1e-15);
    CHECK(phi[2] == doctest::Approx(-s2 / 4.0).epsilon(1e-12));
    CHECK(phi[3] == doctest::Approx(s3 / 9.0).epsilon(1e-12));
    CHECK(phi[4] == doctest::Approx(-11.0 / 192.0 * s4 + s2 * s2 / 32.0).epsilon(1e-12));
    CHECK(phi[5] ==
          doctest::Approx(19.0 / 600.0 * s5 - s2 * s3 / 36.0).epsilon(1e-12));
  }
  // numeric anchor from the y = 10 table
  auto t10 = PrimeTable::sieve(10);
  CHECK(phi_series(t10, 2)[2] == doctest::Approx(-0.1053798186).epsilon(1e-9));
}

TEST_CASE("Phi_n coefficient bounds at y = 1e4") {
  auto table = PrimeTable::sieve(10000);
  const std::size_t nu = 50;
  auto phi = phi_series(table, nu);
  double fact = 1.0;
  for (std::size_t n = 1; n <= nu; ++n) {
    fact *= static_cast<double>(n);
    CHECK(std::abs(phi[n]) <= std::pow(table.sigma(), (double)n) / fact);
    if (n >= 2) {
      const double b =
          std::sqrt(2.0 * M_PI) * std::pow(std::log(std::log((double)n)) + 1.0, (double)n) / fact;
      CHECK(std::abs(phi[n]) <= b);
    }
  }
}

TEST_CASE("G evaluation: bounds and direct Bessel product") {
  auto table = PrimeTable::sieve(10);
  CHECK(g_eval(table, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  const double direct = bessel_j0(2.0 / std::sqrt(2.0)) * bessel_j0(2.0 / std::sqrt(3.0)) *
                        bessel_j0(2.0 / std::sqrt(5.0)) * bessel_j0(2.0 / std::sqrt(7.0));
  CHECK(g_eval(table, 1.0) == doctest::Approx(direct).epsilon(1e-14));
  auto big = PrimeTable::sieve(1000);
  for (double u = -8.0; u <= 8.0; u += 0.37) CHECK(std::abs(g_eval(big, u)) <= 1.0 + 1e-12);
}

TEST_CASE("G derivatives at zero: reduction formula and 0 < G^(k)(0) <= sigma^k") {
  auto table = PrimeTable::sieve(100);
  auto phi = phi_series(table, 22);
  const double sigma = table.sigma();
  CHECK(g_deriv0(table, 0, phi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g_deriv0(table, 1, phi) == doctest::Approx(sigma).epsilon(1e-14));
  const double expected2 = sigma * sigma - table.sigma_k(2) / 2.0;
  CHECK(g_deriv0(table, 2, phi) == doctest::Approx(expected2).epsilon(1e-12));
  double sk = 1.0;
  for (std::size_t k = 0; k <= 20; ++k) {
    const double gd = g_deriv0(table, k, phi);
    CHECK(gd > 0.0);
    CHECK(gd <= sk * (1.0 + 1e-12));
    sk *= sigma;
  }
  CHECK_THROWS_AS(g_deriv0(table, 23, phi), DomainError);
}

TEST_CASE("exp(sigma z) Phi(z) reproduces the G-derivative sequence") {
  auto table = PrimeTable::sieve(1000);
  auto phi = phi_series(table, 22);
  const double sigma = table.sigma();
  std::vector<double> expc(23);
  double c = 1.0;
  for (std::size_t k = 0; k < expc.size(); ++k) {
    expc[k] = c;
    c *= sigma / static_cast<double>(k + 1);
  }
  PowerSeries g = PowerSeries(expc) * phi;
  double kfact = 1.0;
  for (std::size_t k = 0; k <= 20; ++k) {
    if (k > 1) kfact *= static_cast<double>(k);
    const double lhs = g[k];
    const double rhs = g_deriv0(table, k, phi) / (k <= 1 ? 1.0 : kfact);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("delta moments: odd vanish, closed forms, independent 4th-moment oracle") {
  auto table = PrimeTable::sieve(10);
  auto phi = phi_series(table, 6);
  CHECK(delta_moment(table, 3, phi) == 0.0);
  CHECK(delta_moment(table, 7, phi) == 0.0);
  CHECK(delta_moment(table, 2, phi) ==
        doctest::Approx(table.sigma() / 2.0).epsilon(1e-14));

  // Independent oracle: 4th moment of sum_p sin(theta_p)/sqrt(p) with
  // independent uniform phases: E X^4 = sum_p 3/(8 p^2) + 3 sum_{p != q} 1/(4 p q).
  double m4 = 0.0;
  const auto& ps = table.primes();
  for (std::uint64_t p : ps) m4 += 3.0 / (8.0 * (double)p * (double)p);
  for (std::uint64_t p : ps)
    for (std::uint64_t q : ps)
      if (p != q) m4 += 3.0 / (4.0 * (double)p * (double)q);
  CHECK(delta_moment(table, 4, phi) == doctest::Approx(m4).epsilon(1e-12));
  const double closed = 0.75 * table.sigma() * table.sigma() - 0.375 * table.sigma_k(2);
  CHECK(delta_moment(table, 4, phi) == doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("truncation of G(-u^2) with explicit constants at y = 1e3") {
  auto table = PrimeTable::sieve(1000);
  auto phi = phi_series(table, 8);
  CHECK(g_taylor_truncation(table, phi, 0.0, 3).value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(g_taylor_truncation(table, phi, 0.0, 3).remainder_bound == 0.0);
  for (double u : {0.25, 0.5, 1.0}) {
    for (std::size_t N : {1, 2, 3, 6}) {
      auto res = g_taylor_truncation(table, phi, u, N);
      const double actual = std::abs(g_eval(table, u) - res.value);
      CHECK(actual <= res.remainder_bound);
    }
  }
  CHECK_THROWS_AS(g_taylor_truncation(table, phi, 1.5, 2), DomainError);
  CHECK(truncation_c(1) == 10.0);
  CHECK(truncation_c(2) == 8.1);
  CHECK(truncation_c(5) == 13.5);
}

TEST_CASE("phi_series refuses oversize workloads") {
  auto table = PrimeTable::sieve(100000);
  CHECK_THROWS_AS(phi_series(table, 10000), ResourceError);
}

// Exponential bound on |G(-u^2)| on its smallest honest instance: u = 1 requires
// exp((log y)^{1/3}) > 16, i.e. y ~ 2e9; streamed, no table materialized.
TEST_CASE("exponential bound on |G(-u^2)| at y = 2e9, u = 1" * doctest::timeout(180)) {
  const std::uint64_t y = 2000000000ull;
  const double u = 1.0;
  double log_g = 0.0;
  double sigma_tail = 0.0;
  visit_primes(0, y, [&](std::uint64_t p) {
    log_g += std::log(std::abs(bessel_j0(2.0 * u / std::sqrt((double)p))));
    if (p > 16) sigma_tail += 1.0 / (double)p;
  });
  CHECK(log_g < -(30.0 / 31.0) * u * u * sigma_tail);
}
