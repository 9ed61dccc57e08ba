#pragma once

#include <functional>
#include <vector>

namespace szeta {

// Adaptive Gauss-Kronrod 7/15 panels.  Splits depth-first until every panel
// meets its length-proportional share of abs_tol; throws NumericError when
// the depth limit is hit first.
double adaptive_gk15(const std::function<double(double)>& f, double a, double b, double abs_tol,
                     int max_depth = 60);

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// Nodes/weights computed once per order by Newton iteration on P_n; cached.
const GaussLegendre& gauss_legendre(int n);

}  // namespace szeta
