#include "hqm/bounds.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "hqm/elliptic.hpp"
#include "hqm/quadrature.hpp"

namespace hqm::bounds {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEndpointStrip = 1e-8;
}  // namespace

double k_from_q(double Q) {
    if (Q == kInf) return 1.0;
    if (!(Q >= 1.0)) throw DomainError("k_from_q: Q must be >= 1");
    return (Q - 1.0) / (Q + 1.0);
}

double q_from_k(double k) {
    if (k < 0.0 || k > 1.0) throw DomainError("q_from_k: k must lie in [0, 1]");
    if (k == 1.0) return kInf;
    return (1.0 + k) / (1.0 - k);
}

double quad_tolerance() {
    if (const char* env = std::getenv("HR_QUAD_TOL")) {
        const double tol = std::atof(env);
        if (tol > 0.0) return tol;
    }
    return 1e-10;
}

double upper_bound_M(double x, double k) {
    if (x < 0.0 || x > 1.0) throw DomainError("upper_bound_M: x must lie in [0, 1]");
    if (k < 0.0 || k > 1.0) throw DomainError("upper_bound_M: k must lie in [0, 1]");
    if (x == 0.0) return 1.0 + 0.5 * k;
    if (x < 1e-5) {
        // series of (1/x){1 - (1/x - x) log(1+x)} about x = 0, to avoid cancellation
        return 1.0 + k * (0.5 + (2.0 / 3.0) * x - 0.25 * x * x);
    }
    return 1.0 + (k / x) * (1.0 - (1.0 / x - x) * std::log1p(x));
}

QuadValue lower_bound_m_quad(double x, double Q) {
    if (x < 0.0 || x > 1.0) throw DomainError("lower_bound_m: x must lie in [0, 1]");
    if (Q == kInf) return {0.0, 0.0};
    const double k = k_from_q(Q);
    if (k == 0.0) return {1.0, 0.0};  // integrand is identically 1

    const auto integrand = [&](double t) {
        const double y = elliptic::phi_inv(elliptic::phi(t) / Q);
        return (1.0 + y * x) / (1.0 - k * x + y * (x - k));
    };
    const double tol = quad_tolerance();
    auto q = quadrature::integrate(integrand, kEndpointStrip, 1.0 - kEndpointStrip, tol);
    if (!q.converged) {
        throw NumericalError("lower_bound_m: quadrature did not converge", q.error);
    }
    // endpoint strips via the analytic limit values of the integrand
    const double integral = q.value + kEndpointStrip * (1.0 / (1.0 - k * x) + 1.0 / (1.0 - k));
    const double m = 1.0 / integral;
    return {m, q.error * m * m};
}

double lower_bound_m(double x, double Q) { return lower_bound_m_quad(x, Q).value; }

double mori_upper_bound_on_ratio(double x, double Q) {
    if (x < 0.0 || x > 1.0) throw DomainError("mori_upper_bound_on_ratio: x must lie in [0, 1]");
    if (!(Q >= 1.0) || Q == kInf) throw DomainError("mori_upper_bound_on_ratio: Q must be finite, >= 1");
    const double k = k_from_q(Q);
    if (k == 0.0) return 1.0;
    const double breakpoint = std::pow(16.0, -Q);
    const auto integrand = [&](double t) {
        const double y = 16.0 * std::pow(t, 1.0 / Q);
        return (1.0 + y * x) / (1.0 - k * x + y * (x - k));
    };
    auto q = quadrature::integrate(integrand, 0.0, breakpoint, quad_tolerance());
    return (1.0 - breakpoint + (1.0 - k) * q.value) / (1.0 - k);
}

BoundPair starkov_bounds(const HarmonicMap& map, Complex z, double alpha, double Q) {
    if (!(alpha >= 1.0) || !(Q >= 1.0)) throw DomainError("starkov_bounds: need alpha >= 1, Q >= 1");
    const double ah = std::abs(map.deriv_h(z));
    const double ag = std::abs(map.deriv_g(z));
    if (ag > ah) throw DegeneracyError("starkov_bounds: |g'| > |h'| (sense-reversing point)");
    const double w = 1.0 - std::norm(z);
    return {w * (ah + ag) / (2.0 * alpha * Q), Q * w * (ah - ag)};
}

double theorem2_lower(double omega_abs, double alpha, double z_abs) {
    if (omega_abs < 0.0 || omega_abs >= 1.0 || z_abs < 0.0 || z_abs >= 1.0 || !(alpha >= 1.0)) {
        throw DomainError("theorem2_lower: arguments out of range");
    }
    return (1.0 - omega_abs) / (2.0 * alpha) *
           std::pow((1.0 - z_abs) / (1.0 + z_abs), alpha);
}

double schwarz_pick_dilatation_bound(double u_abs, double k, double z_abs) {
    if (u_abs < 0.0 || u_abs > 1.0 || z_abs < 0.0 || z_abs >= 1.0) {
        throw DomainError("schwarz_pick_dilatation_bound: arguments out of range");
    }
    return k * (z_abs + u_abs) / (1.0 + u_abs * z_abs);
}

BoundPair growth_bounds_hprime(double alpha, double z_abs) {
    if (!(alpha >= 1.0) || z_abs < 0.0 || z_abs >= 1.0) {
        throw DomainError("growth_bounds_hprime: arguments out of range");
    }
    return {std::pow(1.0 - z_abs, alpha - 1.0) / std::pow(1.0 + z_abs, alpha + 1.0),
            std::pow(1.0 + z_abs, alpha - 1.0) / std::pow(1.0 - z_abs, alpha + 1.0)};
}

double affine_hull_order(double alpha, double k) {
    if (!(alpha >= 1.0) || k < 0.0 || k >= 1.0) {
        throw DomainError("affine_hull_order: need alpha >= 1, k in [0, 1)");
    }
    if (k == 0.0) return alpha;
    // (1 - sqrt(1-k^2))/k = k/(1 + sqrt(1-k^2)), stable for small k
    return alpha + k / (1.0 + std::sqrt((1.0 - k) * (1.0 + k)));
}

double convexity_radius_r0(double alpha, double Q) {
    const double a1 = affine_hull_order(alpha, k_from_q(Q));
    return 1.0 / (a1 + std::sqrt(a1 * a1 - 1.0));
}

double convexity_radius_r0_literal(double alpha, double Q) {
    const double k = k_from_q(Q);
    const double c = k == 0.0 ? alpha : alpha + 1.0 / k - std::sqrt(1.0 / (k * k) - 1.0);
    return c - std::sqrt(c * c - 1.0);
}

double convexity_radius_at(double z_abs, double alpha, double Q) {
    if (z_abs < 0.0 || z_abs >= 1.0) throw DomainError("convexity_radius_at: |z| must be < 1");
    const double r0 = convexity_radius_r0(alpha, Q);
    const double s = r0 - 1.0 / r0;
    return 0.5 * (r0 + 1.0 / r0 - std::sqrt(s * s + 4.0 * z_abs * z_abs));
}

}  // namespace hqm::bounds
