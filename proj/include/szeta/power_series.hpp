#pragma once

#include <cstddef>
#include <vector>

namespace szeta {

// Truncated Taylor series about 0; coefficient k of a product is the exact
// truncated convolution sum_{i+j=k} a_i b_j.
class PowerSeries {
 public:
  PowerSeries() : c_(1, 0.0) {}
  explicit PowerSeries(std::vector<double> coeffs);
  static PowerSeries one(std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  double operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0.0; }
  double& at(std::size_t k) { return c_[k]; }
  const std::vector<double>& coeffs() const { return c_; }

  PowerSeries truncated(std::size_t order) const;
  // Coefficient k scaled by r^k, i.e. f(r*z).
  PowerSeries scaled_arg(double r) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  PowerSeries& operator*=(const PowerSeries& b);

  double eval(double z) const;  // Horner

 private:
  std::vector<double> c_;
};

}  // namespace szeta
