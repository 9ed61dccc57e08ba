#pragma once

namespace szeta {

// Bessel J0.  Maclaurin series for |x| <= 9; above that the cosine integral
// representation J0(x) = (2/pi) int_0^{pi/2} cos(x sin t) dt on fixed
// composite Gauss-Legendre panels (the Hankel expansion cannot reach 1e-12
// below |x| ~ 17).
double bessel_j0(double x);

// Probabilists' Hermite polynomial H_n via the three-term recurrence
// H_n = x H_{n-1} - (n-1) H_{n-2}.  0 <= n <= 200.
double hermite(int n, double x);

// Standard normal CDF.
double normal_cdf(double x);

// int_{-inf}^{inf} e^{-u^2/2} H_2n(u) sgn(u - c) du in closed form:
// n = 0: sqrt(2 pi) (1 - 2 Phi(c));  n >= 1: 2 H_{2n-1}(c) e^{-c^2/2}.
double gauss_hermite_sign_integral(int n, double c);

}  // namespace szeta
