#pragma once

// Coefficient algebra for the moment generating function of V_y:
//   phi(z)  = e^-z J0(2i sqrt(z)),        coefficients varpi_n
//   Phi(z)  = prod_{p<=y} phi(z/p),       coefficients Phi_n
//   G(z)    = e^{sigma z} Phi(z) = prod_{p<=y} J0(2i sqrt(z/p))
// plus the per-unit-length moments delta_n of V_y and the explicit
// truncation bound for G(-u^2).

#include "szeta/power_series.hpp"
#include "szeta/primes.hpp"

namespace szeta {

// Taylor coefficients of phi(z): varpi_m = sum_{a+b=m} (-1)^a / (a! (b!)^2).
// 0 <= M <= 200.
PowerSeries varpi_series(std::size_t M);

// Phi_0..Phi_nu by ascending-prime truncated products of phi(z/p).
// Cost is O(pi(y) * nu^2); refuses workloads beyond ~2e10 coefficient ops.
PowerSeries phi_series(const PrimeTable& table, std::size_t nu);

// G(-u^2) = prod_{p<=y} J0(2u/sqrt(p)), ascending primes.
double g_eval(const PrimeTable& table, double u);

// G^(k)(0) = k! sum_{n<=k} Phi_{k-n} sigma^n / n!.
double g_deriv0(const PrimeTable& table, std::size_t k, const PowerSeries& phi);

// delta_n: 0 for odd n; delta_2k = 2^-2k sum_{n<=k} (2k)!/n! Phi_{k-n} sigma^n.
double delta_moment(const PrimeTable& table, std::size_t n, const PowerSeries& phi);

struct TruncationResult {
  double value;            // e^{-sigma u^2} sum_{n<=N} (-1)^n Phi_n u^{2n}
  double remainder_bound;  // C_N e^{-sigma u^2} R_N(u)
};

// Explicit-constant truncation of G(-u^2) for |u| <= 1:
//   R_N(u) = |u|^{2(N+1)} / (N+1)! * mu_N^{N+1},
//   mu_N   = min(loglog(N+1) + 1, sigma),
//   C_1 = 10, C_2 = 8.1, C_N = 13.5 for N >= 3.
TruncationResult g_taylor_truncation(const PrimeTable& table, const PowerSeries& phi, double u,
                                     std::size_t N);

// R_N(u) and C_N by themselves, for reporting.
double truncation_r(const PrimeTable& table, double u, std::size_t N);
double truncation_c(std::size_t N);

}  // namespace szeta
