#include "hqm/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "hqm/bounds.hpp"

namespace hqm::verify {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(Complex z) { return fmt(z.real()) + "," + fmt(z.imag()); }

constexpr double kTurningStepTol = 1e-6;   // allowed backward slip per sample, radians
constexpr double kTotalTurningTol = 1e-4;  // |sum - 2 pi| tolerance

}  // namespace

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["check_name"] = r.check_name;
    if (r.predicted_lo == r.predicted_hi) {
        j["predicted"] = r.predicted_lo;
    } else {
        j["predicted"] = nlohmann::json::array({r.predicted_lo, r.predicted_hi});
    }
    j["measured"] = r.measured;
    j["tolerance"] = r.tolerance;
    j["status"] = r.status == CheckStatus::Pass
                      ? "pass"
                      : (r.status == CheckStatus::Fail ? "fail" : "indeterminate");
    j["metadata"] = r.metadata;
    return j;
}

VerificationReport check_theorem1(const HarmonicMap& map, Complex z0, double alpha, double Q,
                                  const CheckSettings& cs) {
    VerificationReport r;
    r.check_name = "theorem1.ratio_bracket";
    r.metadata["z0"] = fmt(z0);
    r.metadata["alpha"] = fmt(alpha);
    r.metadata["Q"] = fmt(Q);
    r.metadata["n_directions"] = std::to_string(cs.n_directions);
    try {
        const double k = bounds::k_from_q(Q);
        const double omega_abs = std::abs(map.dilatation(z0));
        const double x = k == 0.0 ? 0.0 : (k == 1.0 ? omega_abs : std::min(1.0, omega_abs / k));
        const double m = bounds::lower_bound_m(x, Q);
        const double M = bounds::upper_bound_M(x, k);
        r.predicted_lo = m;
        r.predicted_hi = M;
        r.metadata["x"] = fmt(x);

        HarmonicMap f = map;
        if (std::abs(z0) >= 1e-15) {
            f = map.koebe_transform(std::abs(z0), std::arg(z0),
                                    KoebeNormalization::DirectionalDeriv);
        }
        const HarmonicMap h = f.analytic_part();
        double err = 0.0;
        const auto measure = [&](const HarmonicMap& m_) {
            if (auto a = radii::analytic_radius(m_)) return a->value;
            auto e = radii::univalent_disk_radius(m_, 0.0, cs.n_directions, true, cs.ray);
            err += e.error / std::max(e.value, 1e-12);
            return e.value;
        };
        const double df = measure(f);
        const double dh = measure(h);
        r.measured = df / dh;
        r.tolerance = r.measured * err + 1e-9;
        r.metadata["estimator_error"] = fmt(r.tolerance);
        r.status = (r.measured >= m - r.tolerance && r.measured <= M + r.tolerance)
                       ? CheckStatus::Pass
                       : CheckStatus::Fail;
    } catch (const DegeneracyError& e) {
        r.status = CheckStatus::Indeterminate;
        r.metadata["error"] = e.what();
    } catch (const NumericalError& e) {
        r.status = CheckStatus::Indeterminate;
        r.metadata["error"] = e.what();
    }
    return r;
}

VerificationReport check_theorem2(const HarmonicMap& map, Complex z0, double alpha,
                                  const CheckSettings& cs) {
    VerificationReport r;
    r.check_name = "theorem2.covering_lower_bound";
    r.metadata["z0"] = fmt(z0);
    r.metadata["alpha"] = fmt(alpha);
    try {
        const double omega_abs = std::abs(map.dilatation(z0));
        const double bound = bounds::theorem2_lower(omega_abs, alpha, std::abs(z0));
        r.predicted_lo = bound;
        r.predicted_hi = bound;
        const auto est = radii::radius_at(map, z0, cs.n_directions, cs.ray);
        r.measured = est.value;
        r.tolerance = est.error + 1e-3 * std::max(bound, est.value);
        if (std::abs(r.measured - bound) <= r.tolerance) {
            r.metadata["equality"] = "true";
        }
        r.status = r.measured >= bound - r.tolerance ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const DegeneracyError& e) {
        r.status = CheckStatus::Indeterminate;
        r.metadata["error"] = e.what();
    }
    return r;
}

VerificationReport check_convexity_at_radius(const HarmonicMap& map, Complex z0, double r,
                                             const std::string& name, int n_samples) {
    VerificationReport rep;
    rep.check_name = name;
    rep.metadata["z0"] = fmt(z0);
    rep.metadata["r"] = fmt(r);
    rep.metadata["n_samples"] = std::to_string(n_samples);
    rep.predicted_lo = 2.0 * std::numbers::pi;
    rep.predicted_hi = 2.0 * std::numbers::pi;
    rep.tolerance = kTotalTurningTol;

    if (std::abs(z0) + r >= map.domain_radius()) {
        rep.status = CheckStatus::Indeterminate;
        rep.metadata["error"] = "test disk leaves the map's domain";
        return rep;
    }

    double total = 0.0;
    double prev_arg = 0.0;
    double min_step = 0.0;
    bool first = true;
    for (int j = 0; j <= n_samples; ++j) {
        const double theta = 2.0 * std::numbers::pi * j / n_samples;
        const Complex e = std::polar(1.0, theta);
        const Complex z = z0 + r * e;
        // tangent of theta -> f(z0 + r e^{i theta})
        const Complex dz = Complex(0.0, 1.0) * r * e;
        const Complex t = map.deriv_h(z) * dz + std::conj(map.deriv_g(z) * dz);
        if (std::abs(t) < 1e-12) {
            rep.status = CheckStatus::Indeterminate;
            rep.metadata["error"] = "vanishing tangent";
            return rep;
        }
        const double a = std::arg(t);
        if (!first) {
            double d = a - prev_arg;
            while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
            while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
            total += d;
            min_step = std::min(min_step, d);
        }
        prev_arg = a;
        first = false;
    }
    rep.measured = total;
    rep.metadata["min_arg_step"] = fmt(min_step);
    const bool monotone = min_step >= -kTurningStepTol;
    const bool one_turn = std::abs(total - 2.0 * std::numbers::pi) < kTotalTurningTol;
    rep.status = (monotone && one_turn) ? CheckStatus::Pass : CheckStatus::Fail;
    return rep;
}

VerificationReport check_theorem3_convexity(const HarmonicMap& map, Complex z0, double alpha,
                                            double Q, int n_samples) {
    const double r = bounds::convexity_radius_at(std::abs(z0), alpha, Q);
    VerificationReport rep =
        check_convexity_at_radius(map, z0, r, "theorem3.convexity", n_samples);
    rep.metadata["alpha"] = fmt(alpha);
    rep.metadata["Q"] = fmt(Q);
    return rep;
}

namespace {

VerificationReport sharpness_item(const std::string& name, const HarmonicMap& map,
                                  double predicted, const CheckSettings& cs) {
    VerificationReport r;
    r.check_name = name;
    r.predicted_lo = predicted;
    r.predicted_hi = predicted;
    try {
        const auto est = radii::univalent_disk_radius(map, 0.0, cs.n_directions, true, cs.ray);
        r.measured = est.value;
        r.tolerance = std::max(est.error, 1e-3 * predicted);
        r.metadata["method"] = "ray-lift";
        r.metadata["n_directions"] = std::to_string(cs.n_directions);
        r.status = std::abs(r.measured - predicted) <= r.tolerance ? CheckStatus::Pass
                                                                   : CheckStatus::Fail;
    } catch (const DegeneracyError& e) {
        r.status = CheckStatus::Indeterminate;
        r.metadata["error"] = e.what();
    }
    return r;
}

}  // namespace

std::vector<VerificationReport> run_sharpness_suite(double k, double alpha, int n,
                                                    const CheckSettings& cs) {
    if (k < 0.0 || k >= 1.0 || !(alpha >= 1.0) || n < 1) {
        throw DomainError("run_sharpness_suite: need k in [0,1), alpha >= 1, n >= 1");
    }
    const double Q = bounds::q_from_k(k);
    const double b = k;
    const HarmonicMap kn = HarmonicMap::pommerenke_kn(n);
    const HarmonicMap fn = kn.scaled_combo(k, -1);
    const HarmonicMap ha = HarmonicMap::h_alpha(alpha);
    const HarmonicMap p = ha.scaled_combo(k, 1);
    const HarmonicMap koebe = HarmonicMap::harmonic_koebe();

    std::vector<VerificationReport> out;
    out.push_back(sharpness_item("sharpness.d_kn(0)=1/2n", kn, 0.5 / n, cs));
    out.push_back(
        sharpness_item("sharpness.d_hn(0)=1/(2n(1-k))", fn.analytic_part(), 0.5 / (n * (1.0 - k)), cs));
    out.push_back(sharpness_item("sharpness.d_fn(0)=Q/2n", fn, Q / (2.0 * n), cs));
    out.push_back(sharpness_item("sharpness.d_p(0)=1/(2aQ)", p, 1.0 / (2.0 * alpha * Q), cs));
    out.push_back(sharpness_item("sharpness.d_ph(0)=1/(2a(1+k))", p.analytic_part(),
                                 1.0 / (2.0 * alpha * (1.0 + k)), cs));
    out.push_back(sharpness_item("sharpness.d_koebe(0)=1/6", koebe, 1.0 / 6.0, cs));
    out.push_back(sharpness_item("sharpness.d_affine_koebe(0)=(1-b)/6",
                                 koebe.affine_transform(-b, false), (1.0 - b) / 6.0, cs));
    return out;
}

}  // namespace hqm::verify
