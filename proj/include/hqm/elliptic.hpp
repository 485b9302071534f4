#pragma once

#include "hqm/errors.hpp"

namespace hqm::elliptic {

// Endpoint guard band: phi(t) is evaluated only for t in [kEndpointGuard, 1 - kEndpointGuard];
// outside that band the value is treated as an analytic limit by the callers.
inline constexpr double kEndpointGuard = 1e-12;

// Arithmetic-geometric mean of a, b > 0, iterated to |a_n - b_n| < 1e-15.
double agm(double a, double b);

// Complete elliptic integral of the first kind K(t), modulus t in [0, 1).
// K(t) = pi / (2 agm(1, sqrt(1 - t^2))).  K(0) = pi/2, K(1-) = +inf.
double ellip_k(double t);

// Complementary integral K'(t) = K(sqrt(1 - t^2)), t in (0, 1].
double ellip_k_comp(double t);

// Modulus function phi(t) = (pi/2) K'(t) / K(t), strictly decreasing on (0, 1)
// from +inf to 0.  Satisfies phi(t) phi(sqrt(1 - t^2)) = (pi/2)^2.
double phi(double t);

// Inverse of phi: the unique t in (0, 1) with phi(t) = s, s > 0.
// Bracketed bisection to 1e-13 in t, seeded by the asymptote t ~ 4 e^{-s} for large s.
double phi_inv(double s);

}  // namespace hqm::elliptic
