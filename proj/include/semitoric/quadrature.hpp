#pragma once

#include "semitoric/errors.hpp"

#include <functional>

namespace semitoric::quad {

/// Double-exponential rule on (a,b); handles integrable endpoint
/// singularities (inverse square roots in particular).  Throws
/// QuadratureFailure if the error estimate does not reach tol.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

/// Two-argument variant: f(x, xc) receives the exact distance xc to the
/// nearest endpoint, so integrands with endpoint factors can avoid the
/// cancellation in a - x or b - x.
double tanh_sinh2(const std::function<double(double, double)>& f, double a, double b,
                  double tol = 1e-10);

/// Adaptive Gauss-Kronrod 15-point rule; for smooth integrands.
double gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10);

}  // namespace semitoric::quad
