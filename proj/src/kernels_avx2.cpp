// AVX2+FMA backend.  Compiled with -mavx2 -mfma; only reached after the
// runtime CPU check in kernels.cpp.

#include <immintrin.h>

#include "szeta/batch.hpp"
#include "szeta/kernels.hpp"
#include "szeta/kernels_impl.hpp"

namespace szeta::kern {
namespace {

struct BatchAvx2 {
  __m256d v;

  static BatchAvx2 broadcast(double x) { return {_mm256_set1_pd(x)}; }
  static BatchAvx2 load(const double* p) { return {_mm256_loadu_pd(p)}; }
  void store(double* p) const { _mm256_storeu_pd(p, v); }

  friend BatchAvx2 operator+(BatchAvx2 a, BatchAvx2 b) { return {_mm256_add_pd(a.v, b.v)}; }
  friend BatchAvx2 operator-(BatchAvx2 a, BatchAvx2 b) { return {_mm256_sub_pd(a.v, b.v)}; }
  friend BatchAvx2 operator*(BatchAvx2 a, BatchAvx2 b) { return {_mm256_mul_pd(a.v, b.v)}; }
  friend BatchAvx2 fma(BatchAvx2 a, BatchAvx2 b, BatchAvx2 c) {
    return {_mm256_fmadd_pd(a.v, b.v, c.v)};
  }

  struct Quadrant {
    __m256i bit0;  // all-ones lane mask where (q & 1) != 0
    __m256i bit1;  // all-ones lane mask where (q & 2) != 0
    __m256i bit1c; // all-ones lane mask where ((q+1) & 2) != 0
  };
  static Quadrant quadrant_bits(BatchAvx2 t) {
    __m256i bits = _mm256_castpd_si256(t.v);
    __m256i one = _mm256_set1_epi64x(1);
    __m256i two = _mm256_set1_epi64x(2);
    __m256i q0 = _mm256_and_si256(bits, one);
    __m256i q1 = _mm256_and_si256(bits, two);
    __m256i q1c = _mm256_and_si256(_mm256_add_epi64(bits, one), two);
    Quadrant r;
    r.bit0 = _mm256_cmpeq_epi64(q0, one);
    r.bit1 = _mm256_cmpeq_epi64(q1, two);
    r.bit1c = _mm256_cmpeq_epi64(q1c, two);
    return r;
  }
  static BatchAvx2 select_sin(Quadrant q, BatchAvx2 sp, BatchAvx2 cp) {
    __m256d sel = _mm256_blendv_pd(sp.v, cp.v, _mm256_castsi256_pd(q.bit0));
    __m256d sign = _mm256_and_pd(_mm256_castsi256_pd(q.bit1), _mm256_set1_pd(-0.0));
    return {_mm256_xor_pd(sel, sign)};
  }
  static BatchAvx2 select_cos(Quadrant q, BatchAvx2 sp, BatchAvx2 cp) {
    __m256d sel = _mm256_blendv_pd(cp.v, sp.v, _mm256_castsi256_pd(q.bit0));
    __m256d sign = _mm256_and_pd(_mm256_castsi256_pd(q.bit1c), _mm256_set1_pd(-0.0));
    return {_mm256_xor_pd(sel, sign)};
  }
};

void sin_dot_avx2(const double* logx, const double* weight, std::size_t m,
                  const double* t, std::size_t nt, double* out) {
  sin_dot_impl<BatchAvx2>(logx, weight, m, t, nt, out);
}

double cos_dot_avx2(const double* logx, const double* weight, std::size_t m,
                    double t, double theta) {
  return cos_dot_impl<BatchAvx2>(logx, weight, m, t, theta);
}

}  // namespace

extern const KernelTable kAvx2Table;
const KernelTable kAvx2Table{sin_dot_avx2, cos_dot_avx2, "avx2"};

}  // namespace szeta::kern
