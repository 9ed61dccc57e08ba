#include "szeta/valuedist.hpp"

#include <cmath>
#include <string>

#include "szeta/errors.hpp"
#include "szeta/specfun.hpp"

namespace szeta {

double ExpansionParams::a() const { return alpha * std::sqrt(2.0 / sigma); }
double ExpansionParams::b() const { return beta * std::sqrt(2.0 / sigma); }

bool ExpansionParams::nu_admissible() const {
  return static_cast<double>(nu) <=
         std::exp(std::pow(std::log(static_cast<double>(y)), 0.25));
}

double theorem3_rhs(const ExpansionParams& params, const PowerSeries& phi) {
  if (phi.order() < params.nu)
    throw DomainError("theorem3_rhs: series order below nu = " + std::to_string(params.nu));
  if (params.nu > 100) throw DomainError("theorem3_rhs supports nu <= 100 (Hermite degree cap)");
  const double a = params.a();
  const double inv2s = 1.0 / (2.0 * params.sigma);
  double sum = 0.0;
  double coef = 1.0;  // (2 sigma)^-n
  for (std::size_t n = 0; n <= params.nu; ++n) {
    sum += phi[n] * coef * gauss_hermite_sign_integral(static_cast<int>(n), a);
    coef *= inv2s;
  }
  return sum / std::sqrt(2.0 * M_PI);
}

double delta_budget(double y, double H, std::size_t nu, double sigma) {
  if (!(y >= 3.0)) throw DomainError("delta_budget requires y >= 3");
  if (!(H > 1.0)) throw DomainError("delta_budget requires H > 1");
  const double ly = std::log(y);
  const double t1 = 1.0 / (std::sqrt(ly) * std::log(ly));
  const double t2 = std::sqrt(ly / std::log(H));
  const double base = (std::log(std::log(static_cast<double>(nu) + 2.0)) + 1.0) / sigma;
  const double t3 = std::pow(base, static_cast<double>(nu + 1)) / static_cast<double>(nu + 1);
  return t1 + t2 + t3;
}

double corollary1_rhs_closed(const ExpansionParams& params, const PowerSeries& phi) {
  if (!(params.alpha < params.beta)) throw DomainError("corollary1_rhs requires alpha < beta");
  if (phi.order() < params.nu)
    throw DomainError("corollary1_rhs: series order below nu");
  if (params.nu > 100) throw DomainError("corollary1_rhs supports nu <= 100");
  const double a = params.a();
  const double b = params.b();
  double sum = normal_cdf(b) - normal_cdf(a);  // n = 0 term, phi_0 = 1
  const double inv2s = 1.0 / (2.0 * params.sigma);
  double coef = inv2s;
  const double ea = std::exp(-0.5 * a * a), eb = std::exp(-0.5 * b * b);
  for (std::size_t n = 1; n <= params.nu; ++n) {
    const double integral =
        ea * hermite(static_cast<int>(2 * n - 1), a) - eb * hermite(static_cast<int>(2 * n - 1), b);
    sum += phi[n] * coef * integral / std::sqrt(2.0 * M_PI);
    coef *= inv2s;
  }
  return sum;
}

double corollary1_rhs_via_sgn(const ExpansionParams& params, const PowerSeries& phi) {
  if (!(params.alpha < params.beta)) throw DomainError("corollary1_rhs requires alpha < beta");
  ExpansionParams pa = params;
  ExpansionParams pb = params;
  pb.alpha = params.beta;
  return 0.5 * (theorem3_rhs(pa, phi) - theorem3_rhs(pb, phi));
}

double corollary1_rhs(const ExpansionParams& params, const PowerSeries& phi) {
  const double closed = corollary1_rhs_closed(params, phi);
  const double via_sgn = corollary1_rhs_via_sgn(params, phi);
  if (std::abs(closed - via_sgn) > 1e-10)
    throw NumericError("corollary1_rhs: closed-form and sgn routes disagree by " +
                       std::to_string(std::abs(closed - via_sgn)));
  return closed;
}

double theorem1_rhs(double a, double b) {
  if (!(a < b)) throw DomainError("theorem1_rhs requires a < b");
  return normal_cdf(b) - normal_cdf(a);
}

bool theorem3_window_ok(double y, double H) {
  constexpr double c = 1.4e4;
  const double llH = std::log(std::log(H));
  if (!(llH > 0.0)) return false;
  return y > 2.0 && std::log(y) <= std::log(H) / (c * llH);
}

MeasureReport compare_theorem3(const PrimeTable& table, const GridFunction& grid,
                               const ExpansionParams& params, const PowerSeries& phi) {
  MeasureReport rep;
  VyContext ctx(table);
  const double h = grid.h();
  rep.empirical = sign_measure(ctx, grid, params.alpha) / h;
  rep.analytic = theorem3_rhs(params, phi);
  rep.delta_budget = delta_budget(static_cast<double>(params.y), h, params.nu, params.sigma);
  rep.window_ok = theorem3_window_ok(static_cast<double>(params.y), h);
  rep.nu_ok = params.nu_admissible();
  rep.hypothesis_ok = rep.window_ok && rep.nu_ok;
  rep.ratio = rep.analytic != 0.0 ? rep.empirical / rep.analytic : 0.0;
  return rep;
}

double histogram_mass(const SWindowStats& stats, double a, double b) {
  if (!(a < b)) throw DomainError("histogram_mass requires a < b");
  double mass = 0.0;
  for (std::size_t k = 0; k < stats.bin_mass.size(); ++k) {
    double lo = stats.bin_lo + static_cast<double>(k) * stats.bin_width;
    double hi = lo + stats.bin_width;
    // Edge bins hold the clamped out-of-range samples, so they extend to
    // +-infinity for mass queries.
    if (k == 0) lo = std::min(lo, a);
    if (k + 1 == stats.bin_mass.size()) hi = std::max(hi, b);
    const double olap = std::min(hi, b) - std::max(lo, a);
    if (olap <= 0.0) continue;
    mass += stats.bin_mass[k] * std::min(1.0, olap / (hi - lo));
  }
  return mass;
}

MeasureReport compare_theorem1(const SWindowStats& stats, double a, double b,
                               double sigma_for_diag) {
  MeasureReport rep;
  const double total = stats.h;
  rep.empirical = histogram_mass(stats, a, b) / total;
  rep.analytic = theorem1_rhs(a, b);
  rep.delta_budget = 0.0;
  rep.hypothesis_ok = true;
  rep.window_ok = true;
  rep.nu_ok = true;
  rep.ratio = rep.analytic != 0.0 ? rep.empirical / rep.analytic : 0.0;
  if (sigma_for_diag > 0.0) {
    const double f = std::sqrt(std::log(std::log(stats.t0)) / sigma_for_diag);
    rep.xi = a * f;
    rep.eta = b * f;
  }
  return rep;
}

double ks_normal(const SWindowStats& stats) {
  const double total = stats.h;
  double cum = 0.0;
  double ks = 0.0;
  for (std::size_t k = 0; k < stats.bin_mass.size(); ++k) {
    cum += stats.bin_mass[k];
    const double edge = stats.bin_lo + static_cast<double>(k + 1) * stats.bin_width;
    ks = std::max(ks, std::abs(cum / total - normal_cdf(edge)));
  }
  return ks;
}

}  // namespace szeta
