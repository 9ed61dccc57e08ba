#pragma once

#include <cstdint>

#include "szeta/dirichlet.hpp"
#include "szeta/power_series.hpp"
#include "szeta/primes.hpp"
#include "szeta/zetaline.hpp"

namespace szeta {

// Parameter bundle for the Hermite-expansion right-hand sides.  Normalized
// levels a = alpha sqrt(2/sigma), b = beta sqrt(2/sigma).
struct ExpansionParams {
  std::uint64_t y = 0;
  double sigma = 0.0;
  std::size_t nu = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double omega = 0.0;  // informational; the final formulas do not use it

  double a() const;
  double b() const;
  bool nu_admissible() const;  // nu <= exp((log y)^{1/4})
};

struct MeasureReport {
  double empirical = 0.0;
  double analytic = 0.0;
  double delta_budget = 0.0;
  double ratio = 0.0;
  bool hypothesis_ok = false;  // window condition (y range) AND nu condition
  bool window_ok = false;      // y0 < y <= exp(log H / (c loglog H)), c = 1.4e4
  bool nu_ok = false;
  double xi = 0.0, eta = 0.0;  // rescaling diagnostic (compare_theorem1 only)
};

// Hermite sign expansion per unit window length:
// (1/sqrt(2pi)) sum_{n<=nu} Phi_n/(2 sigma)^n int e^{-u^2/2} H_2n(u) sgn(u - a) du.
double theorem3_rhs(const ExpansionParams& params, const PowerSeries& phi);

// Error budget Delta = (log y)^{-1/2}/loglog y + (log y/log H)^{1/2}
//                      + (loglog(nu+2)+1)^{nu+1} / ((nu+1) sigma^{nu+1}).
double delta_budget(double y, double H, std::size_t nu, double sigma);

// Characteristic-function expansion per unit H, closed-form route:
// int_a^b e^{-u^2/2} H_2n = e^{-a^2/2} H_{2n-1}(a) - e^{-b^2/2} H_{2n-1}(b).
double corollary1_rhs_closed(const ExpansionParams& params, const PowerSeries& phi);
// Same quantity through the sgn identity chi = (sgn(u-a) - sgn(u-b))/2.
double corollary1_rhs_via_sgn(const ExpansionParams& params, const PowerSeries& phi);
// Closed-form value, cross-checked against the sgn route to 1e-9.
double corollary1_rhs(const ExpansionParams& params, const PowerSeries& phi);

// Gaussian mass NormalCDF(b) - NormalCDF(a).
double theorem1_rhs(double a, double b);

// Is y in the proven window y0 < y <= exp(log H / (c loglog H)), c = 1.4e4?
bool theorem3_window_ok(double y, double H);

// Empirical sign measure over the grid vs the Hermite sign expansion.
MeasureReport compare_theorem3(const PrimeTable& table, const GridFunction& grid,
                               const ExpansionParams& params, const PowerSeries& phi);

// Normalized-S histogram mass on (a, b] vs the Gaussian; sigma_for_diag, when
// positive, fills the xi/eta rescaling diagnostic xi = a sqrt(loglog T / sigma).
MeasureReport compare_theorem1(const SWindowStats& stats, double a, double b,
                               double sigma_for_diag = 0.0);

// Kolmogorov-Smirnov distance between the normalized-S histogram and N(0,1).
double ks_normal(const SWindowStats& stats);

// Histogram mass on (a, b] with linear apportioning of partial bins.
double histogram_mass(const SWindowStats& stats, double a, double b);

}  // namespace szeta
