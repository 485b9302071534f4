#include "hqm/elliptic.hpp"

#include <cmath>
#include <numbers>

namespace hqm::elliptic {

namespace {
constexpr double kAgmTol = 1e-15;
}

double agm(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw DomainError("agm: arguments must be positive");
    }
    while (std::abs(a - b) > kAgmTol * std::max(a, b)) {
        const double am = 0.5 * (a + b);
        const double gm = std::sqrt(a * b);
        a = am;
        b = gm;
    }
    return 0.5 * (a + b);
}

double ellip_k(double t) {
    if (t < 0.0 || t > 1.0) {
        throw DomainError("ellip_k: modulus must lie in [0, 1)");
    }
    if (t == 1.0) {
        throw DivergenceError("ellip_k: K(1) is infinite");
    }
    const double comp = std::sqrt((1.0 - t) * (1.0 + t));
    return std::numbers::pi / (2.0 * agm(1.0, comp));
}

double ellip_k_comp(double t) {
    if (t < 0.0 || t > 1.0) {
        throw DomainError("ellip_k_comp: modulus must lie in (0, 1]");
    }
    if (t == 0.0) {
        throw DivergenceError("ellip_k_comp: K'(0) is infinite");
    }
    // K'(t) = K(sqrt(1-t^2)) = pi / (2 agm(1, t)); the direct AGM form avoids
    // the 1 - t^2 cancellation for tiny t
    return std::numbers::pi / (2.0 * agm(1.0, t));
}

double phi(double t) {
    if (t < 0.0 || t > 1.0) {
        throw DomainError("phi: modulus must lie in (0, 1)");
    }
    if (t <= kEndpointGuard || t >= 1.0 - kEndpointGuard) {
        throw DivergenceError("phi: evaluation at an endpoint limit (phi(0+)=inf, phi(1-)=0)");
    }
    return ellip_k_comp(t) / ellip_k(t) * (std::numbers::pi / 2.0);
}

double phi_inv(double s) {
    if (!(s > 0.0)) {
        throw DomainError("phi_inv: argument must be positive");
    }
    double lo = 2.0 * kEndpointGuard;
    double hi = 1.0 - 2.0 * kEndpointGuard;
    // phi is strictly decreasing, so phi(lo) ~ log(4/lo) is the largest reachable value.
    if (s >= phi(lo)) {
        return 4.0 * std::exp(-s);  // asymptotic inverse, already exact to ~t^2 here
    }
    if (s <= phi(hi)) {
        return hi;
    }
    if (s > 4.0) {
        // Seed a tight bracket around the asymptote t ~ 4 e^{-s}.
        const double seed = 4.0 * std::exp(-s);
        double a = std::max(lo, 0.5 * seed);
        double b = std::min(hi, 2.0 * seed);
        if (phi(a) >= s && phi(b) <= s) {
            lo = a;
            hi = b;
        }
    }
    while (hi - lo > 1e-13 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (phi(mid) > s) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace hqm::elliptic
