#include "hqm/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace hqm::quadrature {

namespace {

constexpr int kOrder = 15;

struct Rule {
    std::array<double, kOrder> node{};
    std::array<double, kOrder> weight{};
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n; computed once.
Rule make_rule() {
    Rule r;
    const int n = kOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.node[i] = x;
        r.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const Rule& rule() {
    static const Rule r = make_rule();
    return r;
}

double panel(const std::function<double(double)>& f, double a, double b, long& evals) {
    const Rule& r = rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kOrder; ++i) {
        sum += r.weight[i] * f(mid + half * r.node[i]);
    }
    evals += kOrder;
    return half * sum;
}

void refine(const std::function<double(double)>& f, double a, double b, double whole,
            double tol, int depth, Result& out) {
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid, out.evaluations);
    const double right = panel(f, mid, b, out.evaluations);
    const double diff = std::abs(left + right - whole);
    if (diff < tol || depth <= 0) {
        out.value += left + right;
        out.error += diff;
        if (depth <= 0 && diff >= tol) out.converged = false;
        return;
    }
    refine(f, a, mid, left, 0.5 * tol, depth - 1, out);
    refine(f, mid, b, right, 0.5 * tol, depth - 1, out);
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth) {
    Result out;
    if (a == b) return out;
    const double whole = panel(f, a, b, out.evaluations);
    refine(f, a, b, whole, abs_tol, max_depth, out);
    return out;
}

}  // namespace hqm::quadrature
