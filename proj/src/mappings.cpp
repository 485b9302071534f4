#include "hqm/mappings.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace hqm {

namespace {
const Complex kI{0.0, 1.0};
}

struct HarmonicMap::Impl {
    virtual ~Impl() = default;
    virtual Complex h(Complex z) const = 0;
    virtual Complex g(Complex z) const = 0;
    virtual Complex dh(Complex z) const = 0;
    virtual Complex dg(Complex z) const = 0;
    virtual double domain_radius() const { return 1.0; }
    MapDescriptor desc;
};

namespace {

using Impl = HarmonicMap::Impl;

struct KnImpl final : Impl {
    explicit KnImpl(int n_) : n(n_) {
        desc.kind = MapKind::PommerenkeKn;
        desc.n = n_;
    }
    int n;
    Complex h(Complex z) const override {
        return kI / (2.0 * n) * (std::pow((1.0 - kI * z) / (1.0 + kI * z), double(n)) - 1.0);
    }
    Complex g(Complex) const override { return 0.0; }
    Complex dh(Complex z) const override {
        return std::pow(1.0 - kI * z, double(n - 1)) / std::pow(1.0 + kI * z, double(n + 1));
    }
    Complex dg(Complex) const override { return 0.0; }
};

struct HAlphaImpl final : Impl {
    explicit HAlphaImpl(double a) : alpha(a) {
        desc.kind = MapKind::HAlpha;
        desc.alpha = a;
    }
    double alpha;
    Complex h(Complex z) const override {
        return (std::pow((1.0 + kI * z) / (1.0 - kI * z), alpha) - 1.0) / (2.0 * kI * alpha);
    }
    Complex g(Complex) const override { return 0.0; }
    Complex dh(Complex z) const override {
        return std::pow(1.0 + kI * z, alpha - 1.0) / std::pow(1.0 - kI * z, alpha + 1.0);
    }
    Complex dg(Complex) const override { return 0.0; }
};

struct KoebeHImpl final : Impl {
    KoebeHImpl() { desc.kind = MapKind::HarmonicKoebe; }
    Complex h(Complex z) const override {
        return (z - 0.5 * z * z + z * z * z / 6.0) / std::pow(1.0 - z, 3.0);
    }
    Complex g(Complex z) const override {
        return (0.5 * z * z + z * z * z / 6.0) / std::pow(1.0 - z, 3.0);
    }
    Complex dh(Complex z) const override { return (1.0 + z) / std::pow(1.0 - z, 4.0); }
    Complex dg(Complex z) const override { return z * (1.0 + z) / std::pow(1.0 - z, 4.0); }
};

struct SeriesImpl final : Impl {
    SeriesImpl(std::vector<Complex> hc, std::vector<Complex> gc, double rho_)
        : hc_(std::move(hc)), gc_(std::move(gc)), rho(rho_) {
        if (!(rho > 0.0) || rho > 1.0) {
            throw DomainError("series: reliable radius must lie in (0, 1]");
        }
        desc.kind = MapKind::Series;
        desc.h_coeffs = hc_;
        desc.g_coeffs = gc_;
        desc.rho = rho_;
    }
    std::vector<Complex> hc_, gc_;
    double rho;
    static Complex horner(const std::vector<Complex>& c, Complex z) {
        Complex acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc * z;  // coefficients start at z^1
    }
    static Complex horner_deriv(const std::vector<Complex>& c, Complex z) {
        Complex acc = 0.0;
        for (std::size_t j = c.size(); j-- > 0;) acc = acc * z + double(j + 1) * c[j];
        return acc;
    }
    Complex h(Complex z) const override { return horner(hc_, z); }
    Complex g(Complex z) const override { return horner(gc_, z); }
    Complex dh(Complex z) const override { return horner_deriv(hc_, z); }
    Complex dg(Complex z) const override { return horner_deriv(gc_, z); }
    double domain_radius() const override { return rho; }
};

struct AffineImpl final : Impl {
    AffineImpl(std::shared_ptr<const Impl> b, Complex eps, bool normalize) : base(std::move(b)) {
        den = normalize ? 1.0 + eps * base->dg(0.0) : Complex(1.0);
        if (std::abs(den) < 1e-14) {
            throw DegeneracyError("affine_transform: vanishing normalizer 1 + eps g'(0)");
        }
        this->eps = eps;
        desc.kind = MapKind::Affine;
        desc.eps = eps;
        desc.normalize = normalize;
        desc.base = std::make_shared<MapDescriptor>(base->desc);
    }
    std::shared_ptr<const Impl> base;
    Complex eps, den;
    // f + eps conj(f) = (h + eps g) + conj(g + conj(eps) h)
    Complex h(Complex z) const override { return (base->h(z) + eps * base->g(z)) / den; }
    Complex g(Complex z) const override {
        return (base->g(z) + std::conj(eps) * base->h(z)) / std::conj(den);
    }
    Complex dh(Complex z) const override { return (base->dh(z) + eps * base->dg(z)) / den; }
    Complex dg(Complex z) const override {
        return (base->dg(z) + std::conj(eps) * base->dh(z)) / std::conj(den);
    }
    double domain_radius() const override { return base->domain_radius(); }
};

struct ScaledComboImpl final : Impl {
    ScaledComboImpl(std::shared_ptr<const Impl> b, double k_, int sign_)
        : base(std::move(b)), k(k_), sign(sign_) {
        if (k < 0.0 || k >= 1.0) throw DomainError("scaled_combo: k must lie in [0, 1)");
        if (sign != 1 && sign != -1) throw DomainError("scaled_combo: sign must be +1 or -1");
        scale = 1.0 / (1.0 + sign * k);
        desc.kind = MapKind::ScaledCombo;
        desc.k = k;
        desc.sign = sign;
        desc.base = std::make_shared<MapDescriptor>(base->desc);
    }
    std::shared_ptr<const Impl> base;
    double k, scale;
    int sign;
    Complex h(Complex z) const override { return scale * base->h(z); }
    Complex g(Complex z) const override { return sign * k * scale * base->h(z); }
    Complex dh(Complex z) const override { return scale * base->dh(z); }
    Complex dg(Complex z) const override { return sign * k * scale * base->dh(z); }
    double domain_radius() const override { return base->domain_radius(); }
};

struct KoebeTransImpl final : Impl {
    KoebeTransImpl(std::shared_ptr<const Impl> b, Complex a_, double theta_,
                   KoebeNormalization norm)
        : base(std::move(b)), a(a_), rot(std::polar(1.0, theta_)) {
        if (std::abs(a) >= 1.0) throw DomainError("koebe_transform: |a| must be < 1");
        if (base->domain_radius() < 1.0) {
            throw DomainError("koebe_transform: base must be defined on the full disk");
        }
        const Complex phi0 = rot * a;
        const Complex dphi0 = rot * (1.0 - std::norm(a));
        if (norm == KoebeNormalization::AnalyticDeriv) {
            N = base->dh(phi0) * dphi0;
        } else {
            N = (base->dh(phi0) * rot + std::conj(base->dg(phi0) * rot)) * std::abs(dphi0);
        }
        if (std::abs(N) < 1e-14) {
            throw DegeneracyError("koebe_transform: vanishing normalizer");
        }
        h0 = base->h(phi0);
        g0 = base->g(phi0);
        desc.kind = MapKind::Koebe;
        desc.a = a_;
        desc.theta = theta_;
        desc.koebe_norm = norm;
        desc.base = std::make_shared<MapDescriptor>(base->desc);
    }
    std::shared_ptr<const Impl> base;
    Complex a, rot, N, h0, g0;
    Complex phi(Complex z) const { return rot * (z + a) / (1.0 + std::conj(a) * z); }
    Complex dphi(Complex z) const {
        const Complex d = 1.0 + std::conj(a) * z;
        return rot * (1.0 - std::norm(a)) / (d * d);
    }
    Complex h(Complex z) const override { return (base->h(phi(z)) - h0) / N; }
    Complex g(Complex z) const override { return (base->g(phi(z)) - g0) / std::conj(N); }
    Complex dh(Complex z) const override { return base->dh(phi(z)) * dphi(z) / N; }
    Complex dg(Complex z) const override { return base->dg(phi(z)) * dphi(z) / std::conj(N); }
};

struct AnalyticPartImpl final : Impl {
    explicit AnalyticPartImpl(std::shared_ptr<const Impl> b) : base(std::move(b)) {
        desc.kind = MapKind::AnalyticPart;
        desc.base = std::make_shared<MapDescriptor>(base->desc);
    }
    std::shared_ptr<const Impl> base;
    Complex h(Complex z) const override { return base->h(z); }
    Complex g(Complex) const override { return 0.0; }
    Complex dh(Complex z) const override { return base->dh(z); }
    Complex dg(Complex) const override { return 0.0; }
    double domain_radius() const override { return base->domain_radius(); }
};

}  // namespace

HarmonicMap::HarmonicMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

HarmonicMap HarmonicMap::pommerenke_kn(int n) {
    if (n < 1) throw DomainError("pommerenke_kn: n must be >= 1");
    return HarmonicMap(std::make_shared<KnImpl>(n));
}

HarmonicMap HarmonicMap::h_alpha(double alpha) {
    if (!(alpha >= 1.0)) throw DomainError("h_alpha: order must be >= 1");
    return HarmonicMap(std::make_shared<HAlphaImpl>(alpha));
}

HarmonicMap HarmonicMap::harmonic_koebe() { return HarmonicMap(std::make_shared<KoebeHImpl>()); }

HarmonicMap HarmonicMap::series(std::vector<Complex> h_coeffs, std::vector<Complex> g_coeffs,
                                double rho) {
    return HarmonicMap(std::make_shared<SeriesImpl>(std::move(h_coeffs), std::move(g_coeffs), rho));
}

HarmonicMap HarmonicMap::identity() { return series({1.0}, {}, 1.0); }

HarmonicMap HarmonicMap::affine_transform(Complex eps, bool normalize) const {
    if (std::abs(eps) >= 1.0) throw DomainError("affine_transform: |eps| must be < 1");
    return HarmonicMap(std::make_shared<AffineImpl>(impl_, eps, normalize));
}

HarmonicMap HarmonicMap::scaled_combo(double k, int sign) const {
    return HarmonicMap(std::make_shared<ScaledComboImpl>(impl_, k, sign));
}

HarmonicMap HarmonicMap::koebe_transform(Complex a, double theta, KoebeNormalization norm) const {
    return HarmonicMap(std::make_shared<KoebeTransImpl>(impl_, a, theta, norm));
}

HarmonicMap HarmonicMap::analytic_part() const {
    return HarmonicMap(std::make_shared<AnalyticPartImpl>(impl_));
}

HarmonicMap HarmonicMap::from_descriptor(const MapDescriptor& d) {
    auto need_base = [&]() -> HarmonicMap {
        if (!d.base) throw DomainError("from_descriptor: wrapper variant without a base");
        return from_descriptor(*d.base);
    };
    switch (d.kind) {
        case MapKind::PommerenkeKn: return pommerenke_kn(d.n);
        case MapKind::HAlpha: return h_alpha(d.alpha);
        case MapKind::HarmonicKoebe: return harmonic_koebe();
        case MapKind::Series: return series(d.h_coeffs, d.g_coeffs, d.rho);
        case MapKind::Affine: return need_base().affine_transform(d.eps, d.normalize);
        case MapKind::ScaledCombo: return need_base().scaled_combo(d.k, d.sign);
        case MapKind::Koebe: return need_base().koebe_transform(d.a, d.theta, d.koebe_norm);
        case MapKind::AnalyticPart: return need_base().analytic_part();
    }
    throw DomainError("from_descriptor: unknown variant");
}

namespace {
void check_domain(const HarmonicMap& m, Complex z) {
    if (std::abs(z) >= m.domain_radius()) {
        throw DomainError("evaluation point outside the map's domain radius");
    }
}
}  // namespace

Complex HarmonicMap::eval(Complex z) const {
    check_domain(*this, z);
    return impl_->h(z) + std::conj(impl_->g(z));
}

Complex HarmonicMap::h(Complex z) const {
    check_domain(*this, z);
    return impl_->h(z);
}

Complex HarmonicMap::g(Complex z) const {
    check_domain(*this, z);
    return impl_->g(z);
}

Complex HarmonicMap::deriv_h(Complex z) const {
    check_domain(*this, z);
    return impl_->dh(z);
}

Complex HarmonicMap::deriv_g(Complex z) const {
    check_domain(*this, z);
    return impl_->dg(z);
}

Complex HarmonicMap::dilatation(Complex z) const {
    check_domain(*this, z);
    const Complex a = impl_->dh(z);
    if (std::abs(a) < 1e-300) throw DegeneracyError("dilatation: h'(z) = 0");
    return impl_->dg(z) / a;
}

double HarmonicMap::jacobian(Complex z) const {
    check_domain(*this, z);
    return std::norm(impl_->dh(z)) - std::norm(impl_->dg(z));
}

Complex HarmonicMap::directional_derivative(Complex z, double theta) const {
    check_domain(*this, z);
    const Complex e = std::polar(1.0, theta);
    return impl_->dh(z) * e + std::conj(impl_->dg(z) * e);
}

double HarmonicMap::domain_radius() const { return impl_->domain_radius(); }

const MapDescriptor& HarmonicMap::descriptor() const { return impl_->desc; }

NormalizationTag HarmonicMap::normalization_tag() const {
    switch (impl_->desc.kind) {
        case MapKind::PommerenkeKn:
        case MapKind::HAlpha:
        case MapKind::HarmonicKoebe:
            return NormalizationTag::A1One;
        case MapKind::ScaledCombo:
            return NormalizationTag::A1PlusAm1One;
        default:
            return NormalizationTag::None;
    }
}

double HarmonicMap::qc_constant(int n_r, int n_theta, double r_max) const {
    if (impl_->desc.kind == MapKind::ScaledCombo) return impl_->desc.k;
    double sup = 0.0;
    const double cap = std::min(r_max, domain_radius() * (1.0 - 1e-9));
    for (int i = 1; i <= n_r; ++i) {
        const double r = cap * i / n_r;
        for (int j = 0; j < n_theta; ++j) {
            const Complex z = std::polar(r, 2.0 * std::numbers::pi * j / n_theta);
            sup = std::max(sup, std::abs(dilatation(z)));
        }
    }
    return sup;
}

}  // namespace hqm
