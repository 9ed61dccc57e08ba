#include "szeta/signapprox.hpp"

#include <cmath>

#include "szeta/errors.hpp"
#include "szeta/quadrature.hpp"

namespace szeta {

double fejer_k(double x) {
  if (!std::isfinite(x)) throw DomainError("fejer_k: non-finite argument");
  if (x == 0.0) return 1.0;
  const double s = std::sin(M_PI * x) / (M_PI * x);
  return s * s;
}

double g_kernel(double t) {
  if (!std::isfinite(t)) throw DomainError("g_kernel: non-finite argument");
  if (t == 0.0) throw DomainError("g_kernel: t = 0 is a pole");
  const double a = std::abs(t);
  if (a >= 1.0) return 0.0;
  const double sgn = t > 0.0 ? 1.0 : -1.0;
  return 2.0 * (sgn / M_PI + (1.0 - a) / std::tan(M_PI * t));
}

double f_omega(double u, double omega, double abs_tol) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("f_omega requires omega > 0");
  if (!std::isfinite(u)) throw DomainError("f_omega: non-finite u");
  if (u == 0.0) return 0.0;
  // g(s) ~ 2/(pi s) as s -> 0+, so the integrand extends continuously with
  // value 4u at t = 0 (the quadrature nodes are interior, the endpoint value
  // only guards direct evaluation).
  auto integrand = [&](double t) {
    if (t <= 0.0) return 4.0 * u;
    if (t >= omega) return 0.0;
    return g_kernel(t / omega) * std::sin(2.0 * M_PI * u * t) / omega;
  };
  return adaptive_gk15(integrand, 0.0, omega, abs_tol);
}

double char_from_sgn(double alpha, double beta, double u) {
  if (!(alpha < beta)) throw DomainError("char_from_sgn requires alpha < beta");
  auto sgn = [](double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); };
  return 0.5 * (sgn(u - alpha) - sgn(u - beta));
}

}  // namespace szeta
