#pragma once

#include <functional>

namespace fwis::quadrature {

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_intervals = 2000;
};

// Adaptive Gauss-Kronrod (G7, K15) with bisection of the interval
// carrying the largest error estimate.  Throws NumericError with
// diagnostics when the budget is exhausted before the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

}  // namespace fwis::quadrature
