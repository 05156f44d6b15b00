// quadrature.hpp - adaptive Gauss-Legendre integration on finite intervals.
#pragma once

#include <functional>

namespace qivar {

// Integrates f over [a, b] to the given absolute tolerance with an adaptive
// 15-point Gauss-Legendre rule. Throws std::runtime_error if the refinement
// depth limit is hit before the tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

}  // namespace qivar
