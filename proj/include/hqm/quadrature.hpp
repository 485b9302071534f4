#pragma once

#include <functional>

namespace hqm::quadrature {

struct Result {
    double value = 0.0;
    double error = 0.0;   // accumulated local error estimates
    long evaluations = 0;
    bool converged = true;
};

// Adaptive Gauss-Legendre integration of f on [a, b] to absolute tolerance abs_tol.
// Each panel is accepted when the 15-point estimate agrees with the sum of the two
// half-panel estimates; otherwise the panel is bisected (up to max_depth levels).
Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 48);

}  // namespace hqm::quadrature
