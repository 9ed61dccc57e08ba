#pragma once

// Hot inner loops behind a runtime-dispatched kernel table.  Two backends:
// the scalar reference (always available) and AVX2+FMA.  Both produce
// bit-identical output; the equivalence suite asserts this, so `auto`
// dispatch never changes results on a given input.

#include <cstddef>
#include <string>

namespace szeta::kern {

enum class Backend { kAuto, kScalar, kAvx2 };

struct KernelTable {
  // out[i] = sum_j weight[j] * sin(t[i] * logx[j]); each output accumulates
  // the j-sum in ascending order, so it matches the scalar v_eval order.
  void (*sin_dot)(const double* logx, const double* weight, std::size_t m,
                  const double* t, std::size_t nt, double* out);
  // Riemann-Siegel style sum for one t: sum_j weight[j] * cos(theta - t*logx[j]),
  // accumulated in four stride-interleaved partial sums combined as
  // (s0+s1)+(s2+s3).
  double (*cos_dot)(const double* logx, const double* weight, std::size_t m,
                    double t, double theta);
  const char* name;
};

bool avx2_supported();

// Resolve a backend choice (throws ConfigError for kAvx2 on unsupported CPUs).
const KernelTable& select(Backend b);
Backend parse_backend(const std::string& name);

// Process-wide default used by the evaluation layers; set once by the CLI.
void set_default_backend(Backend b);
const KernelTable& active();

}  // namespace szeta::kern
