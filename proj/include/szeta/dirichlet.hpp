#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "szeta/primes.hpp"

namespace szeta {

// Uniformly sampled real function of t on [t0, t0 + dt*(len-1)].
struct GridFunction {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> samples;

  double h() const { return dt * static_cast<double>(samples.size() - 1); }
  double t_at(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
};

struct IntegralResult {
  double value = 0.0;
  const char* method = "simpson";  // "simpson" (odd sample count) or "trapezoid"
};

// Dirichlet polynomial V_y(t) = sum_{p<=y} sin(t log p)/sqrt(p).  The scalar
// eval accumulates ascending primes with the deterministic one-lane kernel;
// grids evaluate the same sums through the dispatched batch kernel, one t per
// lane, so grid samples match eval() bit for bit.
class VyContext {
 public:
  explicit VyContext(const PrimeTable& table);

  double eval(double t) const;
  GridFunction grid(double T, double H, double dt, unsigned threads = 1) const;

  double log_y() const { return log_y_; }
  double sum_rsqrt() const { return sum_rsqrt_; }  // crude bound max|V| <= sum 1/sqrt p
  std::uint64_t y() const { return y_; }
  double sigma() const { return sigma_; }

 private:
  std::vector<double> logp_, weight_;
  double log_y_ = 0.0, sum_rsqrt_ = 0.0, sigma_ = 0.0;
  std::uint64_t y_ = 0;
};

// Convenience wrappers matching the operation surface.
double v_eval(const PrimeTable& table, double t);
GridFunction v_grid(const PrimeTable& table, double T, double H, double dt, unsigned threads = 1);

// Composite integral of V^n over the grid window (Simpson for an odd sample
// count, trapezoid otherwise).  n >= 1; throws NumericError if |V|^n leaves
// double range.
IntegralResult moment_integral(const GridFunction& grid, int n);

struct CharFnReport {
  std::complex<double> j;   // integral of exp(2 pi i z V(t))
  double analytic = 0.0;    // H * G(-(pi z)^2)
  double remainder = 0.0;   // |z| (H 2^-N / sqrt(N) + y^{N/2} e^{e (pi z)^2})
  int n_used = 0;
  bool hypothesis_ok = false;  // sigma e pi^2 (z^2+1)/N <= 1/8
};

// J(z) with its analytic prediction and explicit remainder for an admissible
// even N (defaulted to the smallest even integer >= 8 sigma e pi^2 (z^2+1)).
CharFnReport char_function_integral(const PrimeTable& table, const GridFunction& grid, double z,
                                    std::optional<int> n = std::nullopt);

// int sgn(V(t) - alpha) dt with bisection refinement (tolerance 1e-6 dt) of
// every bracketed crossing.
double sign_measure(const VyContext& ctx, const GridFunction& grid, double alpha);

// mes{ t : alpha <= V(t) <= beta } by the same crossing refinement.
double level_set_measure(const VyContext& ctx, const GridFunction& grid, double alpha, double beta);

}  // namespace szeta
