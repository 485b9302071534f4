#pragma once

#include "hqm/mappings.hpp"

namespace hqm::bounds {

// Quasiconformality constant k = (Q-1)/(Q+1); Q may be +inf (giving k = 1).
double k_from_q(double Q);
double q_from_k(double k);

// Quadrature tolerance used by the integral-defined bounds; overridable via the
// HR_QUAD_TOL environment variable.
double quad_tolerance();

// Upper bound M(x, k) on d_f/d_h:
//   M(x, k) = 1 + (k/x){1 - (1/x - x) log(1+x)},  M(0, k) = 1 + k/2.
// Strictly increasing in x on (0,1]; equals 1 + k * int_0^1 (t+x)/(1+xt) dt.
double upper_bound_M(double x, double k);

struct QuadValue {
    double value = 0.0;
    double error = 0.0;  // achieved quadrature error estimate
};

// Lower bound m(x, Q) on d_f/d_h:
//   1/m = int_0^1 (1 + y x)/(1 - kx + y(x - k)) dt,  y = phi_inv(phi(t)/Q),
// with m(x, inf) = 0.  Endpoint limits 1/(1-kx) (t->0) and 1/(1-k) (t->1) are
// attached analytically on strips of width 1e-8.
QuadValue lower_bound_m_quad(double x, double Q);
double lower_bound_m(double x, double Q);

// Mori-based elementary upper bound on d_h/d_f:
//   (1/(1-k)) (1 - 16^{-Q} + (1-k) int_0^{16^{-Q}} (1+yx)/(1-kx+y(x-k)) dt),
// y = 16 t^{1/Q}.  Dominates 1/m(x,Q) and is itself at most 1/(1-k).
double mori_upper_bound_on_ratio(double x, double Q);

struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
};

// Starkov's double-sided radius estimate at z:
//   (1-|z|^2)(|h'|+|g'|)/(2 alpha Q)  <=  d_f(z)  <=  Q (1-|z|^2)(|h'|-|g'|).
BoundPair starkov_bounds(const HarmonicMap& map, Complex z, double alpha, double Q);

// ALIF covering bound: d_f(z) >= (1-|omega(z)|)/(2 alpha) ((1-|z|)/(1+|z|))^alpha.
double theorem2_lower(double omega_abs, double alpha, double z_abs);

// Pointwise dilatation bound k (|z|+|u|)/(1+|u||z|) with u = omega(0)/k.
double schwarz_pick_dilatation_bound(double u_abs, double k, double z_abs);

// Distortion bracket for |h'| over a family of order alpha:
//   (1-|z|)^{a-1}/(1+|z|)^{a+1}  <=  |h'(z)|  <=  (1+|z|)^{a-1}/(1-|z|)^{a+1}.
BoundPair growth_bounds_hprime(double alpha, double z_abs);

// Order of the affine hull: alpha + (1 - sqrt(1-k^2))/k, with limit alpha at k = 0.
double affine_hull_order(double alpha, double k);

// Radius of convexity at the origin for H(alpha, Q):
//   R0 = a1 - sqrt(a1^2 - 1) with a1 = affine_hull_order(alpha, k), k = k_from_q(Q).
// Computed in the cancellation-free form 1/(a1 + sqrt(a1^2 - 1)).
double convexity_radius_r0(double alpha, double Q);

// The literal two-square-root form of R0, kept as an algebraic cross-check.
double convexity_radius_r0_literal(double alpha, double Q);

// R(z) = (R0 + 1/R0 - sqrt((R0 - 1/R0)^2 + 4|z|^2)) / 2.
double convexity_radius_at(double z_abs, double alpha, double Q);

}  // namespace hqm::bounds
