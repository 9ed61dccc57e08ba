#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "szeta/primes.hpp"

namespace szeta {

// Riemann-Siegel theta, theta(t) = -1/2 arg chi(1/2 + it), by the asymptotic
// series t/2 log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3) + 31/(80640 t^5);
// absolute error below 1e-10 for t >= 10.
double rs_theta(double t);
double rs_theta_deriv(double t);

// zeta(1/2 + it) by Euler-Maclaurin with long-double phase accumulation.
// Oracle-grade: absolute error <= 1e-9 on the validated range t <= 1e5
// (accepted up to 2e5, refused beyond on cost grounds).
std::complex<double> zeta_em(double t);

struct ZOptions {
  double em_below = 400.0;  // below this, Z comes from the Euler-Maclaurin engine
  int rs_terms = 5;         // correction terms C0..C4 (1..5)
};

// Hardy Z(t), real with |Z(t)| = |zeta(1/2+it)|.  Riemann-Siegel main sum
// plus up to five correction terms above em_below, labeled Euler-Maclaurin
// evaluation below.  t >= 10.
double hardy_z(double t, const ZOptions& opts = {});

struct ZeroCache {
  double upper = 0.0;
  std::vector<double> gammas;  // strictly increasing zero ordinates
  std::vector<std::string> warnings;

  std::size_t count_below(double t) const;  // N(t)
  void save(const std::string& path) const;
  static ZeroCache load(const std::string& path);
  double scan_dt = 0.0;
};

// Scan Z for sign changes on a dt-grid from t = 10 and refine each bracket
// by bisection.  Completeness is monitored through |N - theta/pi - 1| between
// consecutive zeros; suspicious gaps are rescanned at dt/16 and flagged when
// the monitor still fails.  Deterministic for any thread count.
ZeroCache count_zeros(double t_max, double dt = 0.05, unsigned threads = 1,
                      const ZOptions& opts = {});

// Extend an existing cache up to t_max (appendable persistence flow).
void extend_zeros(ZeroCache& cache, double t_max, double dt = 0.05, unsigned threads = 1,
                  const ZOptions& opts = {});

// S(t) = N(t) - theta(t)/pi - 1; t within [10, cache.upper].
double s_of_t(const ZeroCache& cache, double t);

struct SWindowStats {
  double t0 = 0.0, h = 0.0;
  double positive_measure = 0.0;  // mes{ t : S(t) > 0 }
  double moment2 = 0.0;           // (1/H) int S^2 dt
  // Histogram of pi sqrt(2) S(t) / sqrt(loglog T) over [-8, 8]; equal-width
  // bins, out-of-range samples clamped into the edge bins, total mass <= H.
  double bin_lo = -8.0, bin_width = 0.02;
  std::vector<double> bin_mass;
  double sample_dt = 0.0;
};

// Window statistics over [T, T+H]: positive measure by per-gap root solving
// of theta(t) = pi (N-1), second moment by per-gap Gauss-Legendre, histogram
// by midpoint sampling at dt.
SWindowStats s_window_stats(const ZeroCache& cache, double T, double H, double dt = 0.05,
                            unsigned threads = 1);

// int_T^{T+H} |pi S(t) + V_y(t)|^{2m} dt by per-gap Gauss-Legendre panels.
double joint_moment(const ZeroCache& cache, const PrimeTable& table, double T, double H, int m);

// Explicit joint-moment bound (c0 H / (56 eps)) (pi c0 / eps)^{2m}, c0 = 2880.
double joint_moment_bound(double H, int m, double eps);

namespace detail {
// Riemann-Siegel correction terms C0..C4 at p = frac(sqrt(t/2pi)); exposed
// for the oracle tests that pin them against the Euler-Maclaurin engine.
void rs_correction_coeffs(double p, double c[5]);
}  // namespace detail

}  // namespace szeta
