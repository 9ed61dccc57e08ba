#include "szeta/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "szeta/batch.hpp"
#include "szeta/errors.hpp"
#include "szeta/kernels.hpp"
#include "szeta/parallel.hpp"
#include "szeta/series_coeffs.hpp"

namespace szeta {

VyContext::VyContext(const PrimeTable& table) {
  y_ = table.limit();
  sigma_ = table.sigma();
  logp_.reserve(table.primes().size());
  weight_.reserve(table.primes().size());
  for (std::uint64_t p : table.primes()) {
    const double pd = static_cast<double>(p);
    logp_.push_back(std::log(pd));
    weight_.push_back(1.0 / std::sqrt(pd));
    sum_rsqrt_ += weight_.back();
  }
  log_y_ = std::log(static_cast<double>(y_));
}

double VyContext::eval(double t) const {
  if (std::abs(t) * log_y_ > kern::kMaxTrigArg)
    throw DomainError("v_eval: |t| log y exceeds the trig reduction range");
  double acc = 0.0;
  for (std::size_t j = 0; j < logp_.size(); ++j)
    acc = std::fma(weight_[j], kern::det_sin(t * logp_[j]), acc);
  return acc;
}

GridFunction VyContext::grid(double T, double H, double dt, unsigned threads) const {
  if (!(dt > 0.0)) throw DomainError("v_grid: dt must be positive");
  if (!(H > 1.0)) throw DomainError("v_grid: window length H must exceed 1");
  if (dt * log_y_ > 0.5)
    throw DomainError("v_grid sampling contract violated: need dt*log(y) <= 0.5, got dt*log(y) = " +
                      std::to_string(dt * log_y_));
  if ((std::abs(T) + H) * log_y_ > kern::kMaxTrigArg)
    throw DomainError("v_grid: window end exceeds the trig reduction range");
  const auto len = static_cast<std::size_t>(std::llround(H / dt)) + 1;
  GridFunction g;
  g.t0 = T;
  g.dt = dt;
  g.samples.assign(len, 0.0);
  const auto& k = kern::active();
  for_chunks(len, 4096, threads, [&](std::size_t, std::size_t i0, std::size_t i1) {
    std::vector<double> ts(i1 - i0);
    for (std::size_t i = i0; i < i1; ++i) ts[i - i0] = T + static_cast<double>(i) * dt;
    k.sin_dot(logp_.data(), weight_.data(), logp_.size(), ts.data(), ts.size(),
              g.samples.data() + i0);
  });
  return g;
}

double v_eval(const PrimeTable& table, double t) { return VyContext(table).eval(t); }

GridFunction v_grid(const PrimeTable& table, double T, double H, double dt, unsigned threads) {
  return VyContext(table).grid(T, H, dt, threads);
}

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

IntegralResult integrate_samples(const GridFunction& grid, const std::vector<double>& f) {
  IntegralResult res;
  const std::size_t n = f.size();
  if (n < 2) throw DomainError("integrate: need at least two samples");
  if (n % 2 == 1) {
    double s_odd = 0.0, s_even = 0.0;
    for (std::size_t k = 1; k + 1 < n; k += 2) s_odd += f[k];
    for (std::size_t k = 2; k + 1 < n; k += 2) s_even += f[k];
    res.value = grid.dt / 3.0 * (f[0] + f[n - 1] + 4.0 * s_odd + 2.0 * s_even);
    res.method = "simpson";
  } else {
    double s = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k) s += f[k];
    res.value = grid.dt * (0.5 * (f[0] + f[n - 1]) + s);
    res.method = "trapezoid";
  }
  return res;
}

}  // namespace

IntegralResult moment_integral(const GridFunction& grid, int n) {
  if (n < 1) throw DomainError("moment_integral requires n >= 1");
  double vmax = 0.0;
  for (double v : grid.samples) vmax = std::max(vmax, std::abs(v));
  if (n * std::log2(std::max(vmax, 1.0)) > 1000.0)
    throw NumericError("moment_integral: |V|^n overflows double range");
  std::vector<double> f(grid.samples.size());
  for (std::size_t k = 0; k < f.size(); ++k) f[k] = ipow(grid.samples[k], n);
  return integrate_samples(grid, f);
}

CharFnReport char_function_integral(const PrimeTable& table, const GridFunction& grid, double z,
                                    std::optional<int> n) {
  if (!std::isfinite(z)) throw DomainError("char_function_integral: non-finite z");
  const double sigma = table.sigma();
  const double needed = 8.0 * sigma * M_E * M_PI * M_PI * (z * z + 1.0);
  int N;
  if (n) {
    N = *n;
    if (N < 2 || N % 2 != 0) throw DomainError("char_function_integral: N must be even, >= 2");
  } else {
    N = static_cast<int>(std::ceil(needed));
    if (N % 2 == 1) ++N;
    N = std::max(N, 2);
  }
  CharFnReport rep;
  rep.n_used = N;
  rep.hypothesis_ok = sigma * M_E * M_PI * M_PI * (z * z + 1.0) / N <= 0.125;

  const std::size_t len = grid.samples.size();
  std::vector<double> re(len), im(len);
  const double w = 2.0 * M_PI * z;
  for (std::size_t k = 0; k < len; ++k) {
    re[k] = std::cos(w * grid.samples[k]);
    im[k] = std::sin(w * grid.samples[k]);
  }
  rep.j = {integrate_samples(grid, re).value, integrate_samples(grid, im).value};

  const double h = grid.h();
  rep.analytic = h * g_eval(table, M_PI * z);
  const double y = static_cast<double>(table.limit());
  rep.remainder = std::abs(z) * (h * std::exp2(-static_cast<double>(N)) / std::sqrt(N) +
                                 std::pow(y, 0.5 * N) * std::exp(M_E * M_PI * M_PI * z * z));
  return rep;
}

namespace {

// Bisection for V(t) = level inside a bracketing cell; tolerance 1e-6 dt.
double refine_crossing(const VyContext& ctx, double a, double b, double level, double fa) {
  const double tol = 1e-6 * (b - a);
  for (int iter = 0; iter < 25 && b - a > tol; ++iter) {
    const double m = 0.5 * (a + b);
    const double fm = ctx.eval(m) - level;
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double sign_measure(const VyContext& ctx, const GridFunction& grid, double alpha) {
  const std::size_t n = grid.samples.size();
  auto sgn = [](double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); };
  double measure = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double fa = grid.samples[k] - alpha;
    const double fb = grid.samples[k + 1] - alpha;
    const double sa = sgn(fa), sb = sgn(fb);
    if (sa == sb || sa == 0.0 || sb == 0.0) {
      measure += (sa != 0.0 ? sa : sb) * grid.dt;
      continue;
    }
    const double ta = grid.t_at(k);
    const double c = refine_crossing(ctx, ta, ta + grid.dt, alpha, fa);
    measure += sa * (c - ta) + sb * (ta + grid.dt - c);
  }
  return measure;
}

double level_set_measure(const VyContext& ctx, const GridFunction& grid, double alpha,
                         double beta) {
  if (!(alpha < beta)) throw DomainError("level_set_measure requires alpha < beta");
  const std::size_t n = grid.samples.size();
  double measure = 0.0;
  double cuts[4];
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double va = grid.samples[k];
    const double vb = grid.samples[k + 1];
    const double ta = grid.t_at(k);
    const double tb = ta + grid.dt;
    int ncuts = 0;
    cuts[ncuts++] = ta;
    if ((va - alpha) * (vb - alpha) < 0.0)
      cuts[ncuts++] = refine_crossing(ctx, ta, tb, alpha, va - alpha);
    if ((va - beta) * (vb - beta) < 0.0)
      cuts[ncuts++] = refine_crossing(ctx, ta, tb, beta, va - beta);
    cuts[ncuts++] = tb;
    std::sort(cuts + 1, cuts + ncuts - 1);
    for (int i = 0; i + 1 < ncuts; ++i) {
      const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
      const double vm = (ncuts == 2) ? va : ctx.eval(mid);
      if (vm >= alpha && vm <= beta) measure += cuts[i + 1] - cuts[i];
    }
  }
  return measure;
}

}  // namespace szeta
