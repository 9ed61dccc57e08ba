#include "szeta/kernels.hpp"

#include <atomic>

#include "szeta/errors.hpp"

namespace szeta::kern {

extern const KernelTable kScalarTable;
extern const KernelTable kAvx2Table;

bool avx2_supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

const KernelTable& select(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return kScalarTable;
    case Backend::kAvx2:
      if (!avx2_supported()) throw ConfigError("kernel backend avx2 requested but CPU lacks AVX2+FMA");
      return kAvx2Table;
    case Backend::kAuto:
    default:
      return avx2_supported() ? kAvx2Table : kScalarTable;
  }
}

Backend parse_backend(const std::string& name) {
  if (name == "auto") return Backend::kAuto;
  if (name == "scalar") return Backend::kScalar;
  if (name == "avx2") return Backend::kAvx2;
  throw ConfigError("unknown kernel backend '" + name + "' (expected auto|scalar|avx2)");
}

namespace {
std::atomic<const KernelTable*> g_active{nullptr};
}

void set_default_backend(Backend b) { g_active.store(&select(b), std::memory_order_relaxed); }

const KernelTable& active() {
  const KernelTable* t = g_active.load(std::memory_order_relaxed);
  if (!t) {
    t = &select(Backend::kAuto);
    g_active.store(t, std::memory_order_relaxed);
  }
  return *t;
}

}  // namespace szeta::kern
