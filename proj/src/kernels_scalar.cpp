#include "szeta/batch.hpp"
#include "szeta/kernels.hpp"
#include "szeta/kernels_impl.hpp"

namespace szeta::kern {

double det_sin(double x) {
  using namespace trig;
  double t = std::fma(x, kTwoOverPi, kMagic);
  std::uint64_t q = std::bit_cast<std::uint64_t>(t) & 3u;
  double fn = t - kMagic;
  double r = std::fma(fn, -kPio2Hi, x);
  r = std::fma(fn, -kPio2Mid, r);
  r = std::fma(fn, -kPio2Lo, r);
  double w = r * r;
  double sp = std::fma(w, kS6, kS5);
  sp = std::fma(w, sp, kS4);
  sp = std::fma(w, sp, kS3);
  sp = std::fma(w, sp, kS2);
  sp = std::fma(w, sp, kS1);
  sp = std::fma(r * w, sp, r);
  double cp = std::fma(w, kC6, kC5);
  cp = std::fma(w, cp, kC4);
  cp = std::fma(w, cp, kC3);
  cp = std::fma(w, cp, kC2);
  cp = std::fma(w, cp, kC1);
  cp = std::fma(w, cp, -0.5);
  cp = std::fma(w, cp, 1.0);
  double s = (q & 1u) ? cp : sp;
  return (q & 2u) ? -s : s;
}

double det_cos(double x) {
  using namespace trig;
  double t = std::fma(x, kTwoOverPi, kMagic);
  std::uint64_t q = std::bit_cast<std::uint64_t>(t) & 3u;
  double fn = t - kMagic;
  double r = std::fma(fn, -kPio2Hi, x);
  r = std::fma(fn, -kPio2Mid, r);
  r = std::fma(fn, -kPio2Lo, r);
  double w = r * r;
  double sp = std::fma(w, kS6, kS5);
  sp = std::fma(w, sp, kS4);
  sp = std::fma(w, sp, kS3);
  sp = std::fma(w, sp, kS2);
  sp = std::fma(w, sp, kS1);
  sp = std::fma(r * w, sp, r);
  double cp = std::fma(w, kC6, kC5);
  cp = std::fma(w, cp, kC4);
  cp = std::fma(w, cp, kC3);
  cp = std::fma(w, cp, kC2);
  cp = std::fma(w, cp, kC1);
  cp = std::fma(w, cp, -0.5);
  cp = std::fma(w, cp, 1.0);
  double c = (q & 1u) ? sp : cp;
  return ((q + 1u) & 2u) ? -c : c;
}

namespace {

void sin_dot_scalar(const double* logx, const double* weight, std::size_t m,
                    const double* t, std::size_t nt, double* out) {
  sin_dot_impl<BatchScalar>(logx, weight, m, t, nt, out);
}

double cos_dot_scalar(const double* logx, const double* weight, std::size_t m,
                      double t, double theta) {
  return cos_dot_impl<BatchScalar>(logx, weight, m, t, theta);
}

}  // namespace

extern const KernelTable kScalarTable;
const KernelTable kScalarTable{sin_dot_scalar, cos_dot_scalar, "scalar"};

}  // namespace szeta::kern
