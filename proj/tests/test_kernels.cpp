#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "szeta/batch.hpp"
#include "szeta/kernels.hpp"

using namespace szeta;

namespace {

struct Inputs {
  std::vector<double> logx, w, t;
};

Inputs make_inputs(std::size_t m, std::size_t nt, std::uint32_t seed, double tmax) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Inputs in;
  in.logx.resize(m);
  in.w.resize(m);
  in.t.resize(nt);
  for (auto& v : in.logx) v = u01(rng) * 11.5;
  for (auto& v : in.w) v = u01(rng);
  for (auto& v : in.t) v = u01(rng) * tmax;
  return in;
}

}  // namespace

TEST_CASE("deterministic trig tracks libm across the reduction range") {
  double worst = 0.0;
  for (int i = -40000; i <= 40000; ++i) {
    const double x = i * 3301.1234567 + 0.37 * i * i * 1e-5;
    worst = std::max(worst, std::abs(kern::det_sin(x) - std::sin(x)));
    worst = std::max(worst, std::abs(kern::det_cos(x) - std::cos(x)));
  }
  CHECK(worst < 5e-15);
}

TEST_CASE("trig handles near-multiples of pi/2 without cancellation loss") {
  for (int k = 1; k < 2000; k += 37) {
    const double x = k * (M_PI / 2.0) + 1e-9;
    CHECK(std::abs(kern::det_sin(x) - std::sin(x)) < 1e-15);
  }
}

TEST_CASE("scalar kernel matches a handwritten ascending sum bit for bit") {
  auto in = make_inputs(53, 37, 101, 2.0e4);
  std::vector<double> out(in.t.size());
  const auto& sc = kern::select(kern::Backend::kScalar);
  sc.sin_dot(in.logx.data(), in.w.data(), in.logx.size(), in.t.data(), in.t.size(), out.data());
  for (std::size_t i = 0; i < in.t.size(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < in.logx.size(); ++j)
      acc = std::fma(in.w[j], kern::det_sin(in.t[i] * in.logx[j]), acc);
    CHECK(out[i] == acc);
  }
}

TEST_CASE("avx2 and scalar backends agree bit for bit") {
  if (!kern::avx2_supported()) return;
  const auto& sc = kern::select(kern::Backend::kScalar);
  const auto& vx = kern::select(kern::Backend::kAvx2);
  for (std::uint32_t seed : {7u, 8u, 9u}) {
    auto in = make_inputs(97, 61, seed, 1.0e6);
    std::vector<double> o1(in.t.size()), o2(in.t.size());
    sc.sin_dot(in.logx.data(), in.w.data(), in.logx.size(), in.t.data(), in.t.size(), o1.data());
    vx.sin_dot(in.logx.data(), in.w.data(), in.logx.size(), in.t.data(), in.t.size(), o2.data());
    CHECK(std::memcmp(o1.data(), o2.data(), o1.size() * sizeof(double)) == 0);
    for (double t : {14.2, 5003.7, 999999.1}) {
      const double a = sc.cos_dot(in.logx.data(), in.w.data(), in.logx.size(), t, 0.5 * t);
      const double b = vx.cos_dot(in.logx.data(), in.w.data(), in.logx.size(), t, 0.5 * t);
      CHECK(a == b);
    }
  }
}

TEST_CASE("cos_dot agrees with a long-double reference sum") {
  auto in = make_inputs(211, 1, 5, 0.0);
  const auto& k = kern::active();
  for (double t : {120.0, 9000.5, 2.0e6}) {
    const double theta = 0.4 * t;
    const double got = k.cos_dot(in.logx.data(), in.w.data(), in.logx.size(), t, theta);
    long double ref = 0.0L;
    for (std::size_t j = 0; j < in.logx.size(); ++j)
      ref += (long double)in.w[j] * cosl((long double)theta - (long double)t * (long double)in.logx[j]);
    // the double rounding of each phase t*log(x) bounds the achievable
    // agreement; it grows linearly with t
    const double tol = 5e-12 * std::max(1.0, t / 1000.0);
    CHECK(std::abs(got - (double)ref) < tol);
  }
}

TEST_CASE("backend parsing and dispatch") {
  CHECK(kern::parse_backend("scalar") == kern::Backend::kScalar);
  CHECK(kern::parse_backend("auto") == kern::Backend::kAuto);
  CHECK_THROWS(kern::parse_backend("sse9"));
  CHECK(std::string(kern::select(kern::Backend::kScalar).name) == "scalar");
}
