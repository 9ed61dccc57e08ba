#pragma once

// Kernel bodies shared by every backend.  Included by exactly the translation
// units that instantiate a batch type.

#include <cstddef>

#include "szeta/batch.hpp"

namespace szeta::kern {

// V_y evaluation: vectorized across t (one t per lane), primes accumulated
// in ascending order within each lane.  Lane results are therefore identical
// to a straight scalar sum over ascending primes.
template <class B>
void sin_dot_impl(const double* logx, const double* weight, std::size_t m,
                  const double* t, std::size_t nt, double* out) {
  std::size_t i = 0;
  for (; i + kLanes <= nt; i += kLanes) {
    B tb = B::load(t + i);
    B acc = B::broadcast(0.0);
    for (std::size_t j = 0; j < m; ++j) {
      B phase = tb * B::broadcast(logx[j]);
      acc = fma(B::broadcast(weight[j]), batch_sin(phase), acc);
    }
    acc.store(out + i);
  }
  for (; i < nt; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j)
      acc = std::fma(weight[j], det_sin(t[i] * logx[j]), acc);
    out[i] = acc;
  }
}

// Main-sum kernel: vectorized across terms with four stride-interleaved
// accumulators.  Tail terms are padded with zero weight; the padded phase is
// just theta, which stays in the valid reduction range.
template <class B>
double cos_dot_impl(const double* logx, const double* weight, std::size_t m,
                    double t, double theta) {
  // cos(theta - t*logx) == cos(t*logx - theta)
  B acc = B::broadcast(0.0);
  B tb = B::broadcast(t);
  B th = B::broadcast(-theta);
  std::size_t j = 0;
  for (; j + kLanes <= m; j += kLanes) {
    B phase = fma(tb, B::load(logx + j), th);
    acc = fma(B::load(weight + j), batch_cos(phase), acc);
  }
  if (j < m) {
    double lx[kLanes] = {0, 0, 0, 0};
    double w[kLanes] = {0, 0, 0, 0};
    for (std::size_t k = j; k < m; ++k) {
      lx[k - j] = logx[k];
      w[k - j] = weight[k];
    }
    B phase = fma(tb, B::load(lx), th);
    acc = fma(B::load(w), batch_cos(phase), acc);
  }
  double lanes[kLanes];
  acc.store(lanes);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace szeta::kern
