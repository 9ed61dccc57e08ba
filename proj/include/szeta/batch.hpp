#pragma once

// Fixed-width batches of doubles with an identical elementwise operation
// sequence on every backend.  The trig kernels below are written once as
// templates; the scalar batch evaluates them with std::fma/std::nearbyint
// and the AVX2 batch with the corresponding vector instructions, which
// round identically per IEEE-754.  Lane k of any backend therefore produces
// the same bits as a one-lane scalar evaluation of the same input.

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>

namespace szeta::kern {

inline constexpr int kLanes = 4;

// ---------------------------------------------------------------------------
// Scalar reference batch: a plain array evaluated lane by lane.

struct BatchScalar {
  double v[kLanes];

  static BatchScalar broadcast(double x) {
    BatchScalar r;
    for (double& e : r.v) e = x;
    return r;
  }
  static BatchScalar load(const double* p) {
    BatchScalar r;
    std::memcpy(r.v, p, sizeof r.v);
    return r;
  }
  void store(double* p) const { std::memcpy(p, v, sizeof v); }

  friend BatchScalar operator+(BatchScalar a, BatchScalar b) {
    for (int i = 0; i < kLanes; ++i) a.v[i] += b.v[i];
    return a;
  }
  friend BatchScalar operator-(BatchScalar a, BatchScalar b) {
    for (int i = 0; i < kLanes; ++i) a.v[i] -= b.v[i];
    return a;
  }
  friend BatchScalar operator*(BatchScalar a, BatchScalar b) {
    for (int i = 0; i < kLanes; ++i) a.v[i] *= b.v[i];
    return a;
  }
  // a*b + c with a single rounding.
  friend BatchScalar fma(BatchScalar a, BatchScalar b, BatchScalar c) {
    BatchScalar r;
    for (int i = 0; i < kLanes; ++i) r.v[i] = std::fma(a.v[i], b.v[i], c.v[i]);
    return r;
  }
  // Per-lane 2-bit quadrant selector and sign flips, driven by the integer
  // quadrant batch produced by the range reduction.
  struct Quadrant {
    std::uint64_t q[kLanes];
  };
  static Quadrant quadrant_bits(BatchScalar t) {
    Quadrant r;
    for (int i = 0; i < kLanes; ++i) r.q[i] = std::bit_cast<std::uint64_t>(t.v[i]) & 3u;
    return r;
  }
  // q&1 selects between the two polynomials, high bit selects negation.
  static BatchScalar select_sin(Quadrant q, BatchScalar sp, BatchScalar cp) {
    BatchScalar r;
    for (int i = 0; i < kLanes; ++i) {
      double x = (q.q[i] & 1u) ? cp.v[i] : sp.v[i];
      r.v[i] = (q.q[i] & 2u) ? -x : x;
    }
    return r;
  }
  static BatchScalar select_cos(Quadrant q, BatchScalar sp, BatchScalar cp) {
    BatchScalar r;
    for (int i = 0; i < kLanes; ++i) {
      double x = (q.q[i] & 1u) ? sp.v[i] : cp.v[i];
      r.v[i] = ((q.q[i] + 1u) & 2u) ? -x : x;
    }
    return r;
  }
};

// ---------------------------------------------------------------------------
// Shared constant set for argument reduction modulo pi/2 and the kernel
// polynomials on [-pi/4, pi/4].  Reduction is the three-product FMA form of
// Cody-Waite; with |x| <= 2^27 * pi/2 each fn*Pk product is exact inside the
// fused multiply-add, so the reduced argument keeps close to full precision
// even under heavy cancellation.

inline constexpr double kMaxTrigArg = 1.5e8;

namespace trig {
inline constexpr double kTwoOverPi = 0x1.45f306dc9c883p-1;
inline constexpr double kMagic = 0x1.8p52;  // rounds to integer, exposes low bits
inline constexpr double kPio2Hi = 0x1.921fb54442d18p+0;
inline constexpr double kPio2Mid = 0x1.1a62633145c07p-54;
inline constexpr double kPio2Lo = -0x1.f1976b7ed8fbcp-110;

// fdlibm kernel polynomial coefficients.
inline constexpr double kS1 = -1.66666666666666324348e-01;
inline constexpr double kS2 = 8.33333333332248946124e-03;
inline constexpr double kS3 = -1.98412698298579493134e-04;
inline constexpr double kS4 = 2.75573137070700676789e-06;
inline constexpr double kS5 = -2.50507602534068634195e-08;
inline constexpr double kS6 = 1.58969099521155010221e-10;

inline constexpr double kC1 = 4.16666666666666019037e-02;
inline constexpr double kC2 = -1.38888888888741095749e-03;
inline constexpr double kC3 = 2.48015872894767294178e-05;
inline constexpr double kC4 = -2.75573143513906633035e-07;
inline constexpr double kC5 = 2.08757232129817482790e-09;
inline constexpr double kC6 = -1.13596475577881948265e-11;
}  // namespace trig

template <class B>
struct Reduced {
  B r;
  typename B::Quadrant q;
};

template <class B>
inline Reduced<B> reduce_pio2(B x) {
  using namespace trig;
  B t = fma(x, B::broadcast(kTwoOverPi), B::broadcast(kMagic));
  auto q = B::quadrant_bits(t);
  B fn = t - B::broadcast(kMagic);
  B r = fma(fn, B::broadcast(-kPio2Hi), x);
  r = fma(fn, B::broadcast(-kPio2Mid), r);
  r = fma(fn, B::broadcast(-kPio2Lo), r);
  return {r, q};
}

template <class B>
inline B sin_poly(B r) {
  using namespace trig;
  B w = r * r;
  B p = fma(w, B::broadcast(kS6), B::broadcast(kS5));
  p = fma(w, p, B::broadcast(kS4));
  p = fma(w, p, B::broadcast(kS3));
  p = fma(w, p, B::broadcast(kS2));
  p = fma(w, p, B::broadcast(kS1));
  return fma(r * w, p, r);
}

template <class B>
inline B cos_poly(B r) {
  using namespace trig;
  B w = r * r;
  B p = fma(w, B::broadcast(kC6), B::broadcast(kC5));
  p = fma(w, p, B::broadcast(kC4));
  p = fma(w, p, B::broadcast(kC3));
  p = fma(w, p, B::broadcast(kC2));
  p = fma(w, p, B::broadcast(kC1));
  p = fma(w, p, B::broadcast(-0.5));
  return fma(w, p, B::broadcast(1.0));
}

template <class B>
inline B batch_sin(B x) {
  auto [r, q] = reduce_pio2(x);
  return B::select_sin(q, sin_poly(r), cos_poly(r));
}

template <class B>
inline B batch_cos(B x) {
  auto [r, q] = reduce_pio2(x);
  return B::select_cos(q, sin_poly(r), cos_poly(r));
}

// One-lane versions, used wherever a single deterministic evaluation is
// needed (v_eval, bisection refinements).  They follow the identical
// operation sequence, so they reproduce any batch lane bit-for-bit.
double det_sin(double x);
double det_cos(double x);

}  // namespace szeta::kern
