#include "szeta/power_series.hpp"

#include <algorithm>

#include "szeta/errors.hpp"

namespace szeta {

PowerSeries::PowerSeries(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw DomainError("PowerSeries needs at least the constant coefficient");
}

PowerSeries PowerSeries::one(std::size_t order) {
  std::vector<double> c(order + 1, 0.0);
  c[0] = 1.0;
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  std::vector<double> c(order + 1, 0.0);
  for (std::size_t k = 0; k <= order && k < c_.size(); ++k) c[k] = c_[k];
  return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::scaled_arg(double r) const {
  std::vector<double> c(c_);
  double rk = 1.0;
  for (std::size_t k = 1; k < c.size(); ++k) {
    rk *= r;
    c[k] *= rk;
  }
  return PowerSeries(std::move(c));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::vector<double> c(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t order = std::max(a.order(), b.order());
  std::vector<double> c(order + 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0.0) continue;
    const std::size_t jmax = std::min(b.c_.size(), order + 1 - i);
    for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return PowerSeries(std::move(c));
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& b) {
  *this = *this * b;
  return *this;
}

double PowerSeries::eval(double z) const {
  double acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
  return acc;
}

}  // namespace szeta
