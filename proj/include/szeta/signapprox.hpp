#pragma once

namespace szeta {

// Fejer-type kernel K(x) = (sin(pi x) / (pi x))^2, K(0) = 1.
double fejer_k(double x);

// Odd kernel g(t) = 2(sgn(t)/pi + (1-|t|) cot(pi t)) on |t| <= 1, 0 outside;
// unbounded at t = 0 (throws DomainError there, callers integrate through
// the removable singularity of the product g(t) sin(...)).
double g_kernel(double t);

// Band-limited odd approximant to sgn:
//   F_omega(u) = (1/omega) int_0^omega g(t/omega) sin(2 pi u t) dt,
// evaluated by adaptive quadrature (tolerance abs_tol, default 1e-9); the
// integrand is extended by its limit 2u at t = 0.  |sgn u - F_omega(u)| <=
// K(omega u) pointwise.
double f_omega(double u, double omega, double abs_tol = 1e-9);

// 1/2 (sgn(u - alpha) - sgn(u - beta)): 1 inside (alpha, beta), 0 outside,
// 1/2 at the endpoints.
double char_from_sgn(double alpha, double beta, double u);

}  // namespace szeta
