#include "hqm/radii.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

#include "hqm/bounds.hpp"

namespace hqm::radii {

namespace {

constexpr double kGoldenTol = 1e-5;  // angular refinement tolerance
constexpr double kInvPhi = 0.6180339887498949;

struct RayCore {
    double escape_length;
    double residual_error;
    RayStatus status;
    bool abandoned = false;  // stopped early because the arc exceeded the cutoff
};

RayCore lift_core(const HarmonicMap& map, Complex z0, double psi, const RaySettings& s,
                  std::vector<Complex>* path,
                  const std::function<double()>& cutoff = {}) {
    const double R = map.domain_radius();
    const double threshold = R - s.delta;
    const Complex e_pos = std::polar(1.0, psi);
    const Complex e_neg = std::conj(e_pos);

    bool singular = false;
    const auto vel = [&](Complex z) -> Complex {
        if (std::abs(z) >= threshold) z *= threshold / std::abs(z);
        const Complex a = map.deriv_h(z);
        const Complex b = map.deriv_g(z);
        const double J = std::norm(a) - std::norm(b);
        if (J <= 0.0) {
            singular = true;
            return 0.0;
        }
        return (std::conj(a) * e_pos - std::conj(b) * e_neg) / J;
    };

    Complex z = z0;
    double arc = 0.0;
    if (path) path->push_back(z);
    for (long step = 0; step < s.max_steps; ++step) {
        const Complex a = map.deriv_h(z);
        const Complex b = map.deriv_g(z);
        const double J = std::norm(a) - std::norm(b);
        if (!(J > 0.0)) return {arc, 0.0, RayStatus::Singular};
        // clamp: a step across a near-singular Jacobian can overshoot past R
        const double gap = std::max(0.0, R - std::abs(z));
        // escape once inside the threshold shell, or once the remaining image
        // length is below delta anyway (boundary points with degenerate |h'|-|g'|
        // would otherwise stall the step-size control)
        if (std::abs(z) >= threshold || gap * (std::abs(a) + std::abs(b)) < s.delta) {
            return {arc + (std::abs(a) - std::abs(b)) * gap,
                    (std::abs(a) + std::abs(b)) * gap, RayStatus::Escaped};
        }
        const double h = std::min(s.h_max,
                                  s.step_factor * (R - std::abs(z)) * J /
                                      (std::abs(a) + std::abs(b)));
        // step collapse: the path is metrically pinned to the boundary, so the
        // remaining image length is below delta; finish with the same residual
        if (h < 1e-3 * s.delta) {
            return {arc + (std::abs(a) - std::abs(b)) * gap,
                    (std::abs(a) + std::abs(b)) * gap + s.delta, RayStatus::Escaped};
        }
        const Complex k1 = vel(z);
        const Complex k2 = vel(z + 0.5 * h * k1);
        const Complex k3 = vel(z + 0.5 * h * k2);
        const Complex k4 = vel(z + h * k3);
        if (singular) return {arc, 0.0, RayStatus::Singular};
        z += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        arc += h;
        if (path && s.path_stride > 0 && step % s.path_stride == 0) path->push_back(z);
        // a ray already longer than the running minimum cannot be the answer
        if (cutoff && arc > cutoff()) return {arc, 0.0, RayStatus::StepLimit, true};
    }
    if (path) path->push_back(z);
    return {arc, 0.0, RayStatus::StepLimit};
}

}  // namespace

RayLift ray_lift(const HarmonicMap& map, Complex z0, double psi, const RaySettings& s) {
    if (std::abs(z0) >= map.domain_radius()) throw DomainError("ray_lift: |z0| outside domain");
    RayLift out;
    out.direction = psi;
    std::vector<Complex> path;
    const RayCore core = lift_core(map, z0, psi, s, s.path_stride > 0 ? &path : nullptr);
    out.escape_length = core.escape_length;
    out.status = core.status;
    out.path_samples = std::move(path);
    return out;
}

namespace {

// escape length only; throws on a singular ray
double escape(const HarmonicMap& map, Complex z0, double psi, const RaySettings& s,
              RayStatus& status, const std::function<double()>& cutoff = {}) {
    const RayCore core = lift_core(map, z0, psi, s, nullptr, cutoff);
    status = core.status;
    return core.escape_length;
}

}  // namespace

RadiusEstimate univalent_disk_radius(const HarmonicMap& map, Complex z0, int n_directions,
                                     bool refine, const RaySettings& s) {
    if (n_directions < 1) throw DomainError("univalent_disk_radius: need at least one direction");
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> lengths(n_directions, kInf);
    std::vector<RayStatus> statuses(n_directions, RayStatus::StepLimit);
    std::vector<char> pending(n_directions, 1);

    // running minimum; rays whose arc already exceeds it are abandoned
    std::atomic<double> best_len{kInf};
    const auto note_escape = [&](double len) {
        double cur = best_len.load();
        while (len < cur && !best_len.compare_exchange_weak(cur, len)) {
        }
    };

    // initial abandonment cap: a boundary-sampling probe of the image distance,
    // backstopped by the local metric scale and doubled until some ray escapes
    const double R = map.domain_radius();
    double cap = 4.0 * std::max(1e-6, (R - std::abs(z0)) * (std::abs(map.deriv_h(z0)) +
                                                            std::abs(map.deriv_g(z0))));
    std::optional<double> psi_probe;
    {
        const Complex w0 = map.eval(z0);
        const double r_probe = R * (1.0 - 1e-5);
        double probe = kInf;
        Complex wb_best = w0;
        for (int j = 0; j < 1024; ++j) {
            const Complex zb = std::polar(r_probe, 2.0 * std::numbers::pi * j / 1024.0);
            const Complex wb = map.eval(zb);
            const double dist = std::abs(wb - w0);
            if (dist < probe) {
                probe = dist;
                wb_best = wb;
            }
        }
        if (std::isfinite(probe)) {
            cap = std::min(cap, 1.25 * probe + 100.0 * s.delta);
            if (probe > 0.0) psi_probe = std::arg(wb_best - w0);
        }
    }

    // A slit image subtends an arbitrarily small angle from the basepoint, so a
    // uniform direction grid can miss every bounded direction; seed the sweep
    // with a ray aimed at the nearest sampled boundary image point.
    double probe_len = kInf;
    if (psi_probe) {
        const RayCore core = lift_core(map, z0, *psi_probe, s, nullptr, [&] { return cap; });
        if (core.status == RayStatus::Escaped) {
            probe_len = core.escape_length;
            note_escape(probe_len);
        }
    }

    const unsigned n_workers =
        s.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;

    for (int round = 0; round < 60; ++round) {
        const auto run_range = [&](int lo, int hi) {
            for (int j = lo; j < hi; ++j) {
                if (!pending[j]) continue;
                const double psi = 2.0 * std::numbers::pi * j / n_directions;
                const RayCore core = lift_core(
                    map, z0, psi, s, nullptr,
                    [&] { return std::min(cap, best_len.load()); });
                statuses[j] = core.status;
                if (core.status == RayStatus::Escaped) {
                    lengths[j] = core.escape_length;
                    note_escape(core.escape_length);
                    pending[j] = 0;
                } else if (core.status == RayStatus::Singular) {
                    pending[j] = 0;
                } else {
                    lengths[j] = core.escape_length;  // lower bound only
                    pending[j] = core.abandoned ? 1 : 0;
                }
            }
        };
        if (n_workers > 1 && n_directions > 8) {
            std::vector<std::future<void>> futures;
            const int chunk = (n_directions + int(n_workers) - 1) / int(n_workers);
            for (int lo = 0; lo < n_directions; lo += chunk) {
                const int hi = std::min(lo + chunk, n_directions);
                futures.push_back(std::async(std::launch::async, run_range, lo, hi));
            }
            for (auto& f : futures) f.get();
        } else {
            run_range(0, n_directions);
        }
        if (best_len.load() < kInf || cap > 1e280) break;  // rays > best are irrelevant
        cap *= 2.0;
    }

    int best = 0;
    bool any_escaped = probe_len < kInf;
    for (int j = 0; j < n_directions; ++j) {
        if (statuses[j] == RayStatus::Singular) {
            throw DegeneracyError("univalent_disk_radius: singular ray encountered");
        }
        const bool escaped = statuses[j] == RayStatus::Escaped;
        any_escaped = any_escaped || escaped;
        // abandoned rays carry arcs strictly above the minimum, so a plain argmin
        // over all finite lengths still lands on an escaped ray when one exists
        if (lengths[j] < lengths[best]) best = j;
    }

    RadiusEstimate est;
    est.method = RadiusMethod::RayLift;
    est.directions_used = n_directions;
    est.lower_bound_only = !any_escaped;
    double coarse = probe_len;
    double center = psi_probe.value_or(0.0);
    if (lengths[best] < coarse) {
        coarse = lengths[best];
        center = 2.0 * std::numbers::pi * best / n_directions;
    }
    double refined = coarse;

    if (refine && n_directions >= 3 && any_escaped) {
        const double span = 2.0 * std::numbers::pi / n_directions;
        double a = center - span, b = center + span;
        RayStatus st;
        // anything above the coarse minimum (plus slack) cannot improve it
        const auto lid = [&] { return coarse * (1.0 + 1e-3) + 100.0 * s.delta; };
        double x1 = b - kInvPhi * (b - a);
        double x2 = a + kInvPhi * (b - a);
        double f1 = escape(map, z0, x1, s, st, lid);
        double f2 = escape(map, z0, x2, s, st, lid);
        while (b - a > kGoldenTol) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - kInvPhi * (b - a);
                f1 = escape(map, z0, x1, s, st, lid);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + kInvPhi * (b - a);
                f2 = escape(map, z0, x2, s, st, lid);
            }
        }
        refined = std::min({coarse, f1, f2});
    }

    est.value = refined;
    est.error = (coarse - refined) + 100.0 * s.delta + 1e-6 * std::max(1.0, refined);
    return est;
}

namespace {

bool is_analytic_extremal(const MapDescriptor& d, double& value) {
    switch (d.kind) {
        case MapKind::PommerenkeKn:
            value = 0.5 / d.n;
            return true;
        case MapKind::HAlpha:
            value = 0.5 / d.alpha;
            return true;
        case MapKind::HarmonicKoebe:
            value = 1.0 / 6.0;
            return true;
        case MapKind::ScaledCombo: {
            if (!d.base) return false;
            if (d.base->kind == MapKind::PommerenkeKn && d.sign == -1) {
                value = bounds::q_from_k(d.k) / (2.0 * d.base->n);  // d_{f_n}(0) = Q/2n
                return true;
            }
            if (d.base->kind == MapKind::HAlpha && d.sign == 1) {
                value = 1.0 / (2.0 * d.base->alpha * bounds::q_from_k(d.k));
                return true;
            }
            return false;
        }
        case MapKind::AnalyticPart: {
            if (!d.base) return false;
            const MapDescriptor& b = *d.base;
            if (b.kind == MapKind::ScaledCombo && b.base) {
                if (b.base->kind == MapKind::PommerenkeKn && b.sign == -1) {
                    value = 0.5 / (b.base->n * (1.0 - b.k));  // d_{h_n}(0) = 1/(2n(1-k))
                    return true;
                }
                if (b.base->kind == MapKind::HAlpha && b.sign == 1) {
                    value = 0.5 / (b.base->alpha * (1.0 + b.k));  // 1/(2 alpha (1+k))
                    return true;
                }
            }
            if (b.kind == MapKind::PommerenkeKn || b.kind == MapKind::HAlpha) {
                return is_analytic_extremal(b, value);
            }
            return false;
        }
        case MapKind::Affine: {
            // harmonic Koebe deformed by eps = -b, b in [0,1): d_f(0) = (1-b)/6
            if (d.base && d.base->kind == MapKind::HarmonicKoebe && !d.normalize &&
                d.eps.imag() == 0.0 && d.eps.real() <= 0.0 && d.eps.real() > -1.0) {
                value = (1.0 + d.eps.real()) / 6.0;
                return true;
            }
            return false;
        }
        default:
            return false;
    }
}

}  // namespace

std::optional<RadiusEstimate> analytic_radius(const HarmonicMap& map) {
    double value = 0.0;
    if (!is_analytic_extremal(map.descriptor(), value)) return std::nullopt;
    RadiusEstimate est;
    est.value = value;
    est.method = RadiusMethod::Analytic;
    est.error = 0.0;
    est.directions_used = 0;
    return est;
}

double conformal_radius(const HarmonicMap& map, Complex z) {
    return std::abs(map.deriv_h(z)) * (1.0 - std::norm(z));
}

double pommerenke_lower(const HarmonicMap& map, Complex z, double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("pommerenke_lower: order must be >= 1");
    return conformal_radius(map, z) / (2.0 * alpha);
}

RadiusEstimate radius_at(const HarmonicMap& map, Complex z0, int n_directions,
                         const RaySettings& s, bool prefer_analytic) {
    if (std::abs(z0) < 1e-15) {
        if (prefer_analytic) {
            if (auto a = analytic_radius(map)) return *a;
        }
        return univalent_disk_radius(map, 0.0, n_directions, true, s);
    }
    // recenter: d_f(z0) = d_F(0) |d_theta f(z0)| (1 - |z0|^2)
    const double theta = std::arg(z0);
    const HarmonicMap F = map.koebe_transform(std::abs(z0), theta,
                                              KoebeNormalization::DirectionalDeriv);
    RadiusEstimate est = univalent_disk_radius(F, 0.0, n_directions, true, s);
    const double scale =
        std::abs(map.directional_derivative(z0, theta)) * (1.0 - std::norm(z0));
    est.value *= scale;
    est.error *= scale;
    return est;
}

double ratio_df_dh(const HarmonicMap& map, Complex z0, int n_directions,
                   const RaySettings& s) {
    HarmonicMap f = map;
    if (std::abs(z0) >= 1e-15) {
        f = map.koebe_transform(std::abs(z0), std::arg(z0),
                                KoebeNormalization::DirectionalDeriv);
    }
    const HarmonicMap h = f.analytic_part();
    const auto value = [&](const HarmonicMap& m) {
        if (auto a = analytic_radius(m)) return a->value;
        return univalent_disk_radius(m, 0.0, n_directions, true, s).value;
    };
    return value(f) / value(h);
}

}  // namespace hqm::radii
