#include <cmath>

#include "doctest.h"
#include "szeta/errors.hpp"
#include "szeta/quadrature.hpp"
#include "szeta/signapprox.hpp"

using namespace szeta;

TEST_CASE("fejer kernel values and the cosine identity") {
  CHECK(fejer_k(0.0) == 1.0);
  CHECK(fejer_k(1.0) == doctest::Approx(0.0).epsilon(1e-30));
  CHECK(fejer_k(-3.0) == doctest::Approx(0.0).epsilon(1e-30));
  CHECK(fejer_k(0.5) == doctest::Approx(4.0 / (M_PI * M_PI)).epsilon(1e-14));
  CHECK(4.0 / (M_PI * M_PI) == doctest::Approx(0.4052847346).epsilon(1e-10));
  for (double x : {0.1, 0.7, 3.2}) {
    const double integral = adaptive_gk15(
        [x](double t) { return 2.0 * (1.0 - t) * std::cos(2.0 * M_PI * x * t); }, 0.0, 1.0, 1e-12);
    CHECK(std::abs(fejer_k(x) - integral) < 1e-8);
  }
}

TEST_CASE("odd kernel g: support, oddness, boundary expansions") {
  CHECK(g_kernel(0.5) == doctest::Approx(2.0 / M_PI).epsilon(1e-14));
  CHECK(2.0 / M_PI == doctest::Approx(0.6366197724).epsilon(1e-10));
  CHECK(g_kernel(1.5) == 0.0);
  CHECK(g_kernel(-2.0) == 0.0);
  for (double t : {0.1, 0.33, 0.77, 0.99}) CHECK(g_kernel(-t) == doctest::Approx(-g_kernel(t)).epsilon(1e-14));
  // Boundary expansions of g as defined (the printed factor-2 form):
  //   t -> 1-:  g(t) = (2 pi/3)(1-t)^2 + O((1-t)^4)
  //   t -> 0+:  g(t) = 2/(pi t) - (2 pi/3) t + (2 pi/3) t^2 + O(t^3)
  CHECK(std::abs(g_kernel(0.99) - (2.0 * M_PI / 3.0) * 0.01 * 0.01) < 1e-6);
  for (double t : {1e-3, 5e-3}) {
    const double expansion =
        2.0 / (M_PI * t) - (2.0 * M_PI / 3.0) * t + (2.0 * M_PI / 3.0) * t * t;
    CHECK(std::abs(g_kernel(t) - expansion) < 20.0 * t * t * t);
  }
  CHECK_THROWS_AS(g_kernel(0.0), DomainError);
}

TEST_CASE("F_omega: odd band-limited sign approximant") {
  CHECK(f_omega(0.0, 1.0) == 0.0);
  for (double u : {0.4, 1.7, 3.0}) {
    for (double omega : {1.0, 4.0}) {
      CHECK(f_omega(-u, omega) == doctest::Approx(-f_omega(u, omega)).epsilon(1e-12));
    }
  }
  // K(omega u) = 0 at integer omega*u, so F interpolates sgn exactly there.
  CHECK(std::abs(1.0 - f_omega(3.0, 1.0)) <= fejer_k(3.0) + 1e-6);
  CHECK(std::abs(f_omega(3.0, 1.0) - 1.0) < 1e-6);
  CHECK_THROWS_AS(f_omega(1.0, 0.0), DomainError);
}

TEST_CASE("sign-approximant pointwise bound on a medium grid") {
  for (double omega : {2.0, 10.0}) {
    for (double u = -6.0; u <= 6.0 + 1e-12; u += 0.05) {
      if (std::abs(u) < 1e-12) continue;
      const double sgn = u > 0.0 ? 1.0 : -1.0;
      const double err = std::abs(sgn - f_omega(u, omega));
      CHECK(err <= fejer_k(omega * u) + 1e-6);
    }
  }
}

TEST_CASE("characteristic function from the sgn identity") {
  CHECK(char_from_sgn(0.0, 1.0, 0.5) == 1.0);
  CHECK(char_from_sgn(0.0, 1.0, 2.0) == 0.0);
  CHECK(char_from_sgn(-1.0, 1.0, -0.9999) == 1.0);
  CHECK(char_from_sgn(0.0, 1.0, 0.0) == 0.5);  // endpoint convention
  CHECK(char_from_sgn(0.0, 1.0, 1.0) == 0.5);
  CHECK_THROWS_AS(char_from_sgn(1.0, 0.0, 0.5), DomainError);
}
