#pragma once

#include <complex>
#include <functional>

namespace rosette {

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_subintervals = 2000;
};

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate;
  int subintervals;
  int evaluations;
};

// Globally adaptive 7-point Gauss / 15-point Kronrod rule on [a, b] for a
// complex-valued integrand. Throws QuadratureFailure when the subinterval
// budget runs out before the error estimate meets the tolerance.
QuadratureResult integrate_gk15(const std::function<std::complex<double>(double)>& fn, double a,
                                double b, const QuadratureOptions& opt = {});

} // namespace rosette
