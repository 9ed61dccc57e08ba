#include "szeta/zetaline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>

#include "szeta/dirichlet.hpp"
#include "szeta/errors.hpp"
#include "szeta/kernels.hpp"
#include "szeta/parallel.hpp"
#include "szeta/quadrature.hpp"

namespace szeta {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kZMaxHeight = 1.0e7;

}  // namespace

double rs_theta(double t) {
  if (t < 10.0) throw DomainError("rs_theta validated only for t >= 10");
  const double u = t / kTwoPi;
  const double t2 = t * t;
  return 0.5 * t * std::log(u) - 0.5 * t - M_PI / 8.0 + 1.0 / (48.0 * t) +
         7.0 / (5760.0 * t * t2) + 31.0 / (80640.0 * t2 * t2 * t);
}

double rs_theta_deriv(double t) {
  if (t < 10.0) throw DomainError("rs_theta_deriv validated only for t >= 10");
  const double t2 = t * t;
  return 0.5 * std::log(t / kTwoPi) - 1.0 / (48.0 * t2) - 21.0 / (5760.0 * t2 * t2) -
         155.0 / (80640.0 * t2 * t2 * t2);
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin zeta(1/2 + it).  Long-double phases keep t*log(n) rounding
// below 1e-13 over the oracle range.

namespace {

using cld = std::complex<long double>;

// B_{2k}/(2k)! = (-1)^{k+1} 2 zeta(2k) / (2 pi)^{2k}, computed once.  zeta(2k)
// itself comes from a short Euler-Maclaurin sum with two Bernoulli
// corrections (B2 = 1/6, B4 = -1/30), accurate well past 1e-16 relative.
const std::vector<long double>& bernoulli_over_fact() {
  static const std::vector<long double> table = [] {
    std::vector<long double> v(17, 0.0L);
    const int N = 64;
    for (int k = 1; k <= 16; ++k) {
      const long double s = 2.0L * k;
      long double z = 0.0L;
      for (int n = 1; n < N; ++n) z += powl((long double)n, -s);
      const long double Np = (long double)N;
      z += powl(Np, 1.0L - s) / (s - 1.0L) + 0.5L * powl(Np, -s);
      z += (1.0L / 12.0L) * s * powl(Np, -s - 1.0L);
      z += (-1.0L / 720.0L) * s * (s + 1.0L) * (s + 2.0L) * powl(Np, -s - 3.0L);
      long double val = 2.0L * z / powl(2.0L * (long double)M_PIl, s);
      v[k] = (k % 2 == 1) ? val : -val;
    }
    return v;
  }();
  return table;
}

}  // namespace

std::complex<double> zeta_em(double t) {
  if (!(t >= 0.0)) throw DomainError("zeta_em requires t >= 0");
  if (t > 2.0e5) throw DomainError("zeta_em oracle range is t <= 1e5 (hard cap 2e5)");
  const long double lt = t;
  const int M = std::max(32, static_cast<int>(std::ceil(1.2 * t)));
  cld sum = 0.0L;
  for (int n = 1; n < M; ++n) {
    const long double phi = lt * logl((long double)n);
    const long double w = 1.0L / sqrtl((long double)n);
    sum += cld(w * cosl(phi), -w * sinl(phi));
  }
  const cld s(0.5L, lt);
  const long double lM = logl((long double)M);
  auto m_pow = [&](cld e) {  // M^e
    const long double mag = expl(e.real() * lM);
    const long double ang = e.imag() * lM;
    return cld(mag * cosl(ang), mag * sinl(ang));
  };
  sum += m_pow(cld(1.0L, 0.0L) - s) / (s - cld(1.0L, 0.0L));
  sum += 0.5L * m_pow(-s);
  const auto& bof = bernoulli_over_fact();
  cld rising = s;  // s(s+1)...(s+2k-2), here for k = 1
  for (int k = 1; k <= 16; ++k) {
    const cld term = bof[k] * rising * m_pow(-s - cld((long double)(2 * k - 1), 0.0L));
    sum += term;
    if (std::abs(term) < 1e-18L) break;
    rising *= (s + cld((long double)(2 * k - 1), 0.0L)) * (s + cld((long double)(2 * k), 0.0L));
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

// ---------------------------------------------------------------------------
// Riemann-Siegel correction terms.  Psi(p) = cos(2 pi (p^2 - p - 1/16)) /
// cos(2 pi p) is entire; its Taylor coefficients about p = 1/2 are recovered
// once from Cauchy integrals on the circle |h| = 1.2 (which avoids the
// removable 0/0 points at h = +-1/4, +-3/4), and the correction terms are the
// classical Psi-derivative combinations evaluated from that series.

namespace {

constexpr int kPsiOrder = 96;
constexpr int kDerivMax = 12;

struct PsiSeries {
  // dc[k][j] = psi_{j+k} * (j+k)!/j!, so Psi^(k)(1/2 + h) = sum_j dc[k][j] h^j.
  std::vector<std::vector<double>> dc;
};

const PsiSeries& psi_series() {
  static const PsiSeries series = [] {
    const int K = 2048;
    const double R = 1.2;
    std::vector<std::complex<double>> vals(K);
    for (int j = 0; j < K; ++j) {
      const double ang = kTwoPi * j / K;
      const std::complex<double> h = std::polar(R, ang);
      const std::complex<double> num = std::cos(kTwoPi * (h * h - 5.0 / 16.0));
      const std::complex<double> den = -std::cos(kTwoPi * h);
      vals[j] = num / den;
    }
    std::vector<double> psi(kPsiOrder + 1);
    for (int m = 0; m <= kPsiOrder; ++m) {
      std::complex<double> acc = 0.0;
      for (int j = 0; j < K; ++j) {
        const double ang = -kTwoPi * j * m / K;
        acc += vals[j] * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      psi[m] = acc.real() / (K * std::pow(R, m));
    }
    PsiSeries s;
    s.dc.resize(kDerivMax + 1);
    for (int k = 0; k <= kDerivMax; ++k) {
      s.dc[k].resize(kPsiOrder - k + 1);
      for (int j = 0; j + k <= kPsiOrder; ++j) {
        double fall = 1.0;
        for (int i = 0; i < k; ++i) fall *= static_cast<double>(j + k - i);
        s.dc[k][j] = psi[j + k] * fall;
      }
    }
    return s;
  }();
  return series;
}

double psi_deriv(int k, double h) {
  const auto& dc = psi_series().dc[k];
  double acc = 0.0;
  for (std::size_t j = dc.size(); j-- > 0;) acc = acc * h + dc[j];
  return acc;
}

// C0..C4 of the Riemann-Siegel expansion as functions of p = frac(sqrt(t/2pi)).
void rs_correction_coeffs(double p, double c[5]) {
  const double h = p - 0.5;
  const double pi2 = M_PI * M_PI;
  const double pi4 = pi2 * pi2;
  const double pi6 = pi4 * pi2;
  const double pi8 = pi4 * pi4;
  c[0] = psi_deriv(0, h);
  c[1] = -psi_deriv(3, h) / (96.0 * pi2);
  c[2] = psi_deriv(2, h) / (64.0 * pi2) + psi_deriv(6, h) / (18432.0 * pi4);
  c[3] = -psi_deriv(1, h) / (64.0 * pi2) - psi_deriv(5, h) / (3840.0 * pi4) -
         psi_deriv(9, h) / (5308416.0 * pi6);
  c[4] = psi_deriv(0, h) / (128.0 * pi2) + 19.0 * psi_deriv(4, h) / (24576.0 * pi4) +
         11.0 * psi_deriv(8, h) / (5898240.0 * pi6) + psi_deriv(12, h) / (2038431744.0 * pi8);
}

// log n and n^{-1/2} tables shared by all Riemann-Siegel sums.
struct RsTables {
  std::vector<double> logn, rsqrt;  // index j holds n = j+1
};

std::shared_ptr<const RsTables> rs_tables(std::size_t nmax) {
  static std::mutex mutex;
  static std::shared_ptr<const RsTables> current;
  std::lock_guard<std::mutex> lock(mutex);
  if (!current || current->logn.size() < nmax) {
    auto fresh = std::make_shared<RsTables>();
    const std::size_t n = std::max<std::size_t>(nmax, 64);
    fresh->logn.resize(n);
    fresh->rsqrt.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double v = static_cast<double>(j + 1);
      fresh->logn[j] = std::log(v);
      fresh->rsqrt[j] = 1.0 / std::sqrt(v);
    }
    current = std::move(fresh);
  }
  return current;
}

double hardy_z_rs(double t, const RsTables& tab, int rs_terms) {
  const double tau = t / kTwoPi;
  const double a = std::sqrt(tau);
  const auto n = static_cast<std::size_t>(a);
  const double p = a - static_cast<double>(n);
  const double theta = rs_theta(t);
  const double main = kern::active().cos_dot(tab.logn.data(), tab.rsqrt.data(), n, t, theta);
  double c[5];
  rs_correction_coeffs(p, c);
  const double inv_a = 1.0 / a;
  double corr = 0.0;
  for (int j = std::min(rs_terms, 5) - 1; j >= 0; --j) corr = corr * inv_a + c[j];
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n-1)
  return 2.0 * main + sign * corr / std::sqrt(a);
}

double hardy_z_em(double t) {
  const double theta = rs_theta(t);
  const std::complex<double> z = zeta_em(t);
  return std::cos(theta) * z.real() - std::sin(theta) * z.imag();
}

double z_eval(double t, const ZOptions& opts, const RsTables& tab) {
  if (t < opts.em_below) return hardy_z_em(t);
  return hardy_z_rs(t, tab, opts.rs_terms);
}

}  // namespace

double hardy_z(double t, const ZOptions& opts) {
  if (t < 10.0) throw DomainError("hardy_z requires t >= 10");
  if (t > kZMaxHeight) throw DomainError("hardy_z supported only up to t = 1e7");
  if (t < opts.em_below) return hardy_z_em(t);
  const auto tab = rs_tables(static_cast<std::size_t>(std::sqrt(t / kTwoPi)) + 2);
  return hardy_z_rs(t, *tab, opts.rs_terms);
}

// ---------------------------------------------------------------------------
// Zero scanning.

std::size_t ZeroCache::count_below(double t) const {
  return static_cast<std::size_t>(std::upper_bound(gammas.begin(), gammas.end(), t) -
                                  gammas.begin());
}

void ZeroCache::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open zero cache for writing: " + path);
  char buf[96];
  std::snprintf(buf, sizeof buf, "# upper=%.17g dt=%.17g version=1\n", upper, scan_dt);
  out << buf;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu %.17g\n", i + 1, gammas[i]);
    out << buf;
  }
  if (!out) throw ConfigError("write failure on zero cache: " + path);
}

ZeroCache ZeroCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open zero cache: " + path);
  ZeroCache cache;
  std::string line;
  bool have_header = false;
  double prev = 0.0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (std::sscanf(line.c_str(), "# upper=%lg dt=%lg version=1", &cache.upper,
                      &cache.scan_dt) == 2)
        have_header = true;
      continue;  // other comment lines (config echo, warnings) are skipped
    }
    std::size_t idx;
    double g;
    if (std::sscanf(line.c_str(), "%zu %lg", &idx, &g) != 2)
      throw ConfigError("bad zero cache line: " + line);
    if (g <= prev) throw ConfigError("zero cache not strictly increasing: " + path);
    cache.gammas.push_back(g);
    prev = g;
  }
  if (!have_header) throw ConfigError("zero cache missing its version header: " + path);
  return cache;
}

namespace {

double bisect_zero(double a, double b, double za, const ZOptions& opts, const RsTables& tab) {
  for (int iter = 0; iter < 27; ++iter) {
    const double m = 0.5 * (a + b);
    const double zm = z_eval(m, opts, tab);
    if ((za <= 0.0) == (zm <= 0.0)) {
      a = m;
      za = zm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Scan (lo, hi] for sign changes on a dt-grid anchored at lo.
std::vector<double> scan_zeros(double lo, double hi, double dt, unsigned threads,
                               const ZOptions& opts, const RsTables& tab) {
  if (!(hi > lo)) return {};
  const auto ncells = static_cast<std::size_t>(std::ceil((hi - lo) / dt));
  std::vector<std::vector<double>> chunk_zeros;
  const std::size_t chunk = 2048;
  const std::size_t nchunks = (ncells + chunk - 1) / chunk;
  chunk_zeros.resize(nchunks);
  for_chunks(ncells, chunk, threads, [&](std::size_t ci, std::size_t c0, std::size_t c1) {
    std::vector<double>& zs = chunk_zeros[ci];
    double ta = lo + static_cast<double>(c0) * dt;
    double za = z_eval(ta, opts, tab);
    for (std::size_t k = c0; k < c1; ++k) {
      const double tb = std::min(lo + static_cast<double>(k + 1) * dt, hi);
      if (tb <= ta) break;
      const double zb = z_eval(tb, opts, tab);
      if (za == 0.0)
        zs.push_back(ta);
      else if ((za < 0.0 && zb > 0.0) || (za > 0.0 && zb < 0.0))
        zs.push_back(bisect_zero(ta, tb, za, opts, tab));
      ta = tb;
      za = zb;
    }
  });
  std::vector<double> all;
  for (auto& zs : chunk_zeros) all.insert(all.end(), zs.begin(), zs.end());
  return all;
}

// Completeness monitor.  Between consecutive zeros, N_cache - theta/pi - 1
// equals S(t) sampled at the gap midpoint.  When the cache is complete these
// samples exceed -0.4 well over half the time; a missed zero pair displaces
// every later sample by -2, so over any 64-gap window the fraction above
// -0.4 collapses to P(S > 1.6) ~ 0.  Windowed mean steps cannot serve here:
// S has slowly decaying correlations and legitimate |S| excursions reach
// ~1.6 at desk heights.  Flagged stretches are rescanned at increasing
// resolution; whatever remains after the last pass becomes a warning.
void monitor_and_repair(ZeroCache& cache, double lo, double hi, double dt, const ZOptions& opts,
                        const RsTables& tab) {
  const double eps = 1e-7;
  const double ind_level = 0.4;    // indicator offsets around the S range
  const double frac_limit = 0.125; // <= 12.5% of a window on one side => defect
  const double hard_limit = 2.7;   // guards the tail where windows truncate

  auto insert_sorted = [&](double z) {
    auto pos = std::lower_bound(cache.gammas.begin(), cache.gammas.end(), z);
    if (pos != cache.gammas.end() && std::abs(*pos - z) < 1e-8) return;
    if (pos != cache.gammas.begin() && std::abs(*(pos - 1) - z) < 1e-8) return;
    cache.gammas.insert(pos, z);
  };

  // Close pairs hiding inside one scan cell occur at a steady rate (~1 per
  // 1e4 zeros at dt = 0.05 and these heights), so each pass walks the whole
  // range once and repairs every defect it meets, compensating the running
  // counts by the insertions made so far.  Regions that keep tripping get a
  // 4x finer rescan on the next pass; survivors of the final pass become
  // warnings.
  struct Region {
    double t_lo, t_hi;
    int depth;
  };
  std::vector<Region> prev_regions;
  for (int pass = 0; pass < 8; ++pass) {
    const auto& g = cache.gammas;
    const std::size_t n = g.size();
    // d[i]: midpoint sample of N - theta/pi - 1 in the gap below zero i
    // (entry n is the tail gap up to hi).  The scan anchors at t = 10 with
    // N = 0, so the baseline at the start is exact.
    std::vector<double> d(n + 1);
    std::vector<double> gap_lo(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      const double a = (i == 0) ? lo : g[i - 1];
      const double b = (i == n) ? hi : g[i];
      gap_lo[i] = a;
      const double mid = std::max(0.5 * (a + b), 10.0);
      d[i] = static_cast<double>(i) - rs_theta(mid) / M_PI - 1.0;
    }
    const std::size_t w = std::min<std::size_t>(64, std::max<std::size_t>(8, d.size() / 2));

    std::vector<Region> cur_regions;
    std::vector<double> pending;  // zeros found this pass, inserted afterwards
    double offset = 0.0;          // running count correction from pending zeros
    std::uint32_t above = 0, below = 0;
    auto window_counts = [&](std::size_t i) {
      above = below = 0;
      for (std::size_t j = i; j < i + w && j < d.size(); ++j) {
        above += d[j] + offset > -ind_level ? 1u : 0u;
        below += d[j] + offset < ind_level ? 1u : 0u;
      }
    };
    window_counts(0);
    std::size_t i = 0;
    while (i + w <= d.size()) {
      const bool trip = above <= frac_limit * w || below <= frac_limit * w;
      if (!trip) {
        if (i + w < d.size()) {
          above += (d[i + w] + offset > -ind_level ? 1u : 0u) -
                   (d[i] + offset > -ind_level ? 1u : 0u);
          below += (d[i + w] + offset < ind_level ? 1u : 0u) -
                   (d[i] + offset < ind_level ? 1u : 0u);
        }
        ++i;
        continue;
      }
      const double ta = std::max(gap_lo[i], lo);
      const std::size_t hi_idx = std::min(d.size() - 1, i + w);
      const double tb = std::min((hi_idx < n) ? g[hi_idx] : hi, hi);
      int depth = 0;
      for (const Region& r : prev_regions)
        if (ta < r.t_hi && tb > r.t_lo) depth = std::max(depth, r.depth + 1);
      cur_regions.push_back({ta, tb, depth});
      const double fine = dt / 16.0 / std::pow(4.0, depth);
      auto extra = scan_zeros(ta + eps, tb - eps, fine, 1, opts, tab);
      std::size_t fresh = 0;
      for (double z : extra) {
        auto pos = std::lower_bound(cache.gammas.begin(), cache.gammas.end(), z);
        const bool dup =
            (pos != cache.gammas.end() && std::abs(*pos - z) < 1e-8) ||
            (pos != cache.gammas.begin() && std::abs(*(pos - 1) - z) < 1e-8);
        if (!dup) {
          pending.push_back(z);
          ++fresh;
        }
      }
      offset += static_cast<double>(fresh);
      if (fresh == 0) {
        // Nothing recovered at this resolution: neutralize the displacement
        // virtually so the walk continues, and let the recorded region get a
        // finer rescan next pass.
        offset += (above <= frac_limit * w) ? 2.0 : -2.0;
      }
      i += w;
      window_counts(i);
    }
    // tail guard where look-ahead windows truncate
    for (std::size_t j = d.size() > w ? d.size() - w : 0; j < d.size(); ++j) {
      if (std::abs(d[j] + offset) >= hard_limit) {
        const double ta = std::max(gap_lo[j], lo);
        cur_regions.push_back({ta, hi, 0});
        auto extra = scan_zeros(ta + eps, hi - eps, dt / 64.0, 1, opts, tab);
        for (double z : extra) pending.push_back(z);
        break;
      }
    }
    for (double z : pending) insert_sorted(z);
    if (std::getenv("SZETA_MONITOR_DEBUG"))
      std::fprintf(stderr, "monitor pass %d: %zu regions, %zu inserted\n", pass,
                   cur_regions.size(), pending.size());
    if (cur_regions.empty()) return;
    if (pass == 7) {
      const std::size_t cap = 20;
      for (std::size_t k = 0; k < cur_regions.size() && k < cap; ++k) {
        char buf[128];
        std::snprintf(buf, sizeof buf,
                      "integrity: zero-count defect near t = %.6f not repaired",
                      cur_regions[k].t_lo);
        cache.warnings.emplace_back(buf);
      }
      if (cur_regions.size() > cap)
        cache.warnings.push_back("integrity: " + std::to_string(cur_regions.size() - cap) +
                                 " further defects suppressed");
      return;
    }
    prev_regions = std::move(cur_regions);
  }
}

}  // namespace

ZeroCache count_zeros(double t_max, double dt, unsigned threads, const ZOptions& opts) {
  if (!(t_max > 10.0)) throw DomainError("count_zeros requires t_max > 10");
  if (t_max > kZMaxHeight) throw DomainError("count_zeros supported only up to t_max = 1e7");
  if (!(dt > 0.0) || dt > 0.05) throw DomainError("count_zeros requires 0 < dt <= 0.05");
  ZeroCache cache;
  cache.scan_dt = dt;
  const auto tab = rs_tables(static_cast<std::size_t>(std::sqrt(t_max / kTwoPi)) + 2);
  cache.gammas = scan_zeros(10.0, t_max, dt, threads, opts, *tab);
  cache.upper = t_max;
  monitor_and_repair(cache, 10.0, t_max, dt, opts, *tab);
  return cache;
}

void extend_zeros(ZeroCache& cache, double t_max, double dt, unsigned threads,
                  const ZOptions& opts) {
  if (t_max <= cache.upper) return;
  if (t_max > kZMaxHeight) throw DomainError("extend_zeros supported only up to t_max = 1e7");
  if (!(dt > 0.0) || dt > 0.05) throw DomainError("extend_zeros requires 0 < dt <= 0.05");
  const auto tab = rs_tables(static_cast<std::size_t>(std::sqrt(t_max / kTwoPi)) + 2);
  auto extra = scan_zeros(cache.upper, t_max, dt, threads, opts, *tab);
  cache.gammas.insert(cache.gammas.end(), extra.begin(), extra.end());
  cache.upper = t_max;
  cache.scan_dt = dt;
  // the monitor walk indexes the whole cache, so it always starts at 10
  monitor_and_repair(cache, 10.0, t_max, dt, opts, *tab);
}

double s_of_t(const ZeroCache& cache, double t) {
  if (t < 10.0 || t > cache.upper)
    throw DomainError("s_of_t requires 10 <= t <= cache.upper");
  return static_cast<double>(cache.count_below(t)) - rs_theta(t) / M_PI - 1.0;
}

// ---------------------------------------------------------------------------
// Window statistics.

namespace {

// Walks the zero gaps intersecting [T, T+H]; fn(count, a, b) for each maximal
// subinterval on which N(t) = count.
template <class F>
void walk_gaps(const ZeroCache& cache, double T, double H, F&& fn) {
  const double end = T + H;
  std::size_t idx = cache.count_below(T);
  double a = T;
  while (a < end) {
    const double next = (idx < cache.gammas.size()) ? cache.gammas[idx] : end;
    const double b = std::min(next, end);
    if (b > a) fn(idx, a, b);
    if (next >= end) break;
    a = next;
    ++idx;
  }
}

// Solve theta(t) = target on [a, b] (theta strictly increasing): Newton from
// the midpoint with a bisection bracket as safeguard.
double invert_theta(double target, double a, double b) {
  double t = 0.5 * (a + b);
  for (int iter = 0; iter < 60; ++iter) {
    const double f = rs_theta(t) - target;
    if (f < 0.0)
      a = t;
    else
      b = t;
    double tn = t - f / rs_theta_deriv(t);
    if (!(tn > a && tn < b)) tn = 0.5 * (a + b);
    if (std::abs(tn - t) < 1e-12 * std::max(1.0, std::abs(t))) return tn;
    t = tn;
  }
  return t;
}

}  // namespace

SWindowStats s_window_stats(const ZeroCache& cache, double T, double H, double dt,
                            unsigned threads) {
  if (!(H > 0.0) || !(dt > 0.0)) throw DomainError("s_window_stats requires H > 0, dt > 0");
  if (T < 10.0 || T + H > cache.upper)
    throw DomainError("s_window_stats window must lie within [10, cache.upper]");
  SWindowStats st;
  st.t0 = T;
  st.h = H;
  st.sample_dt = dt;
  const double loglogT = std::log(std::log(T));
  const double scale = M_PI * std::sqrt(2.0) / std::sqrt(loglogT);

  // Positive measure and second moment, gap by gap.
  const GaussLegendre& gl = gauss_legendre(5);
  double positive = 0.0, second = 0.0;
  walk_gaps(cache, T, H, [&](std::size_t count, double a, double b) {
    const double nn = static_cast<double>(count);
    const double sa = nn - rs_theta(a) / M_PI - 1.0;
    const double sb = nn - rs_theta(b) / M_PI - 1.0;
    if (sa > 0.0) {
      if (sb >= 0.0)
        positive += b - a;
      else
        positive += invert_theta(M_PI * (nn - 1.0), a, b) - a;
    }
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double s = nn - rs_theta(c + hw * gl.nodes[i]) / M_PI - 1.0;
      acc += gl.weights[i] * s * s;
    }
    second += acc * hw;
  });
  st.positive_measure = positive;
  st.moment2 = second / H;

  // Histogram of normalized values by midpoint sampling; integer per-chunk
  // counts merge exactly, so the result is thread-count independent.
  const auto nsamp = static_cast<std::size_t>(std::floor(H / dt));
  const auto nbins = static_cast<std::size_t>(std::lround(16.0 / st.bin_width));
  std::vector<std::uint64_t> counts(nbins, 0);
  std::mutex merge_mutex;
  for_chunks(nsamp, 1 << 16, threads, [&](std::size_t, std::size_t i0, std::size_t i1) {
    std::vector<std::uint64_t> local(nbins, 0);
    for (std::size_t i = i0; i < i1; ++i) {
      const double t = T + (static_cast<double>(i) + 0.5) * dt;
      const double s = static_cast<double>(cache.count_below(t)) - rs_theta(t) / M_PI - 1.0;
      const double x = scale * s;
      auto bin = static_cast<long>(std::floor((x - st.bin_lo) / st.bin_width));
      bin = std::clamp<long>(bin, 0, static_cast<long>(nbins) - 1);
      ++local[static_cast<std::size_t>(bin)];
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (std::size_t b = 0; b < nbins; ++b) counts[b] += local[b];
  });
  st.bin_mass.resize(nbins);
  for (std::size_t b = 0; b < nbins; ++b)
    st.bin_mass[b] = static_cast<double>(counts[b]) * dt;
  return st;
}

double joint_moment(const ZeroCache& cache, const PrimeTable& table, double T, double H, int m) {
  if (m < 1) throw DomainError("joint_moment requires m >= 1");
  if (T < 10.0 || T + H > cache.upper)
    throw DomainError("joint_moment window must lie within [10, cache.upper]");
  VyContext ctx(table);
  const GaussLegendre& gl = gauss_legendre(7);
  double total = 0.0;
  walk_gaps(cache, T, H, [&](std::size_t count, double a, double b) {
    const double nn = static_cast<double>(count);
    const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double t = c + hw * gl.nodes[i];
      const double pi_s = M_PI * (nn - 1.0) - rs_theta(t);
      const double f = pi_s + ctx.eval(t);
      double pw = 1.0;
      const double f2 = f * f;
      for (int j = 0; j < m; ++j) pw *= f2;
      acc += gl.weights[i] * pw;
    }
    total += acc * hw;
  });
  return total;
}

double joint_moment_bound(double H, int m, double eps) {
  if (!(eps > 0.0)) throw DomainError("joint_moment_bound requires eps > 0");
  const double c0 = 2880.0;
  return c0 * H / (56.0 * eps) * std::pow(M_PI * c0 / eps, 2.0 * m);
}

namespace detail {
void rs_correction_coeffs(double p, double c[5]) { szeta::rs_correction_coeffs(p, c); }
}  // namespace detail

}  // namespace szeta
