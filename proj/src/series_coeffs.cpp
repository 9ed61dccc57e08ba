#include "szeta/series_coeffs.hpp"

#include <cmath>
#include <string>

#include "szeta/errors.hpp"
#include "szeta/specfun.hpp"

namespace szeta {

PowerSeries varpi_series(std::size_t M) {
  if (M > 200) throw DomainError("varpi_series supports order <= 200");
  // inv_fact[a] = 1/a!, inv_fact_sq[b] = 1/(b!)^2
  std::vector<double> inv_fact(M + 1), inv_fact_sq(M + 1);
  inv_fact[0] = 1.0;
  for (std::size_t a = 1; a <= M; ++a) inv_fact[a] = inv_fact[a - 1] / static_cast<double>(a);
  for (std::size_t b = 0; b <= M; ++b) inv_fact_sq[b] = inv_fact[b] * inv_fact[b];
  std::vector<double> c(M + 1, 0.0);
  for (std::size_t m = 0; m <= M; ++m) {
    double s = 0.0;
    for (std::size_t a = 0; a <= m; ++a) {
      const double term = inv_fact[a] * inv_fact_sq[m - a];
      s += (a % 2 == 0) ? term : -term;
    }
    c[m] = s;
  }
  return PowerSeries(std::move(c));
}

PowerSeries phi_series(const PrimeTable& table, std::size_t nu) {
  const double budget = static_cast<double>(table.primes().size()) *
                        static_cast<double>(nu + 1) * static_cast<double>(nu + 1);
  if (budget > 2e10)
    throw ResourceError("phi_series workload pi(y)*nu^2 = " + std::to_string(budget) +
                        " exceeds budget 2e10");
  const PowerSeries varpi = varpi_series(std::min<std::size_t>(nu, 200));
  PowerSeries phi = PowerSeries::one(nu);
  for (std::uint64_t p : table.primes()) {
    PowerSeries factor = varpi.truncated(nu).scaled_arg(1.0 / static_cast<double>(p));
    phi *= factor;
  }
  return phi;
}

double g_eval(const PrimeTable& table, double u) {
  if (!std::isfinite(u)) throw DomainError("g_eval requires finite u");
  double prod = 1.0;
  for (std::uint64_t p : table.primes())
    prod *= bessel_j0(2.0 * u / std::sqrt(static_cast<double>(p)));
  return prod;
}

double g_deriv0(const PrimeTable& table, std::size_t k, const PowerSeries& phi) {
  if (k > phi.order())
    throw DomainError("g_deriv0: series order " + std::to_string(phi.order()) +
                      " insufficient for k = " + std::to_string(k));
  const double sigma = table.sigma();
  // k! * sum_{n<=k} Phi_{k-n} sigma^n / n!, accumulated for n ascending.
  double s = 0.0;
  double sigma_n_over_nfact = 1.0;
  for (std::size_t n = 0; n <= k; ++n) {
    if (n > 0) sigma_n_over_nfact *= sigma / static_cast<double>(n);
    s += phi[k - n] * sigma_n_over_nfact;
  }
  double kfact = 1.0;
  for (std::size_t i = 2; i <= k; ++i) kfact *= static_cast<double>(i);
  return kfact * s;
}

double delta_moment(const PrimeTable& table, std::size_t n, const PowerSeries& phi) {
  if (n % 2 == 1) return 0.0;
  const std::size_t k = n / 2;
  if (k > phi.order())
    throw DomainError("delta_moment: series order insufficient for n = " + std::to_string(n));
  // (2k)! / (k! 2^2k) * G^(k)(0)
  double binom_factor = 1.0;  // (2k)!/k! = prod_{i=k+1}^{2k} i
  for (std::size_t i = k + 1; i <= 2 * k; ++i) binom_factor *= static_cast<double>(i);
  return binom_factor * g_deriv0(table, k, phi) / std::ldexp(1.0, 2 * static_cast<int>(k));
}

double truncation_r(const PrimeTable& table, double u, std::size_t N) {
  const double mu = std::min(std::log(std::log(static_cast<double>(N + 1))) + 1.0, table.sigma());
  double fact = 1.0;
  for (std::size_t i = 2; i <= N + 1; ++i) fact *= static_cast<double>(i);
  return std::pow(std::abs(u), 2.0 * static_cast<double>(N + 1)) / fact *
         std::pow(mu, static_cast<double>(N + 1));
}

double truncation_c(std::size_t N) {
  if (N == 1) return 10.0;
  if (N == 2) return 8.1;
  return 13.5;
}

TruncationResult g_taylor_truncation(const PrimeTable& table, const PowerSeries& phi, double u,
                                     std::size_t N) {
  if (std::abs(u) > 1.0) throw DomainError("g_taylor_truncation requires |u| <= 1");
  if (N < 1 || N > phi.order())
    throw DomainError("g_taylor_truncation requires 1 <= N <= series order");
  const double sigma = table.sigma();
  const double u2 = u * u;
  double sum = 0.0;
  double u2n = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    const double term = phi[n] * u2n;
    sum += (n % 2 == 0) ? term : -term;
    u2n *= u2;
  }
  const double envelope = std::exp(-sigma * u2);
  return {envelope * sum, truncation_c(N) * envelope * truncation_r(table, u, N)};
}

}  // namespace szeta
