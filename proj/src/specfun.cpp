#include "szeta/specfun.hpp"

#include <cmath>
#include <string>

#include "szeta/errors.hpp"
#include "szeta/quadrature.hpp"

namespace szeta {

double bessel_j0(double x) {
  if (!std::isfinite(x)) throw DomainError("bessel_j0: non-finite argument");
  x = std::abs(x);
  if (x <= 9.0) {
    // sum (-1)^n (x^2/4)^n / (n!)^2; worst-case cancellation at x = 9 still
    // leaves ~1e-13 relative accuracy.
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 60; ++n) {
      term *= -q / (static_cast<double>(n) * static_cast<double>(n));
      sum += term;
      if (std::abs(term) < 1e-19 * std::abs(sum) + 1e-300) break;
    }
    return sum;
  }
  const int panels = static_cast<int>(x / 2.5) + 1;
  const GaussLegendre& gl = gauss_legendre(24);
  const double width = (M_PI / 2.0) / panels;
  double acc = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double mid = (static_cast<double>(k) + 0.5) * width;
    double s = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i)
      s += gl.weights[i] * std::cos(x * std::sin(mid + 0.5 * width * gl.nodes[i]));
    acc += s * 0.5 * width;
  }
  return acc * (2.0 / M_PI);
}

double hermite(int n, double x) {
  if (n < 0) throw DomainError("hermite: negative degree");
  if (n > 200) throw DomainError("hermite: degree above supported range 200");
  if (n == 0) return 1.0;
  if (n == 1) return x;
  double hm2 = 1.0, hm1 = x;
  for (int k = 2; k <= n; ++k) {
    const double hk = x * hm1 - static_cast<double>(k - 1) * hm2;
    hm2 = hm1;
    hm1 = hk;
  }
  return hm1;
}

double normal_cdf(double x) {
  if (std::isnan(x)) throw DomainError("normal_cdf: NaN argument");
  return 0.5 * std::erfc(-x * M_SQRT1_2);
}

double gauss_hermite_sign_integral(int n, double c) {
  if (n < 0) throw DomainError("gauss_hermite_sign_integral: negative degree");
  if (!std::isfinite(c)) throw DomainError("gauss_hermite_sign_integral: non-finite level");
  if (n == 0) return std::sqrt(2.0 * M_PI) * (1.0 - 2.0 * normal_cdf(c));
  return 2.0 * hermite(2 * n - 1, c) * std::exp(-0.5 * c * c);
}

}  // namespace szeta
