#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "hqm/errors.hpp"

namespace hqm {

using Complex = std::complex<double>;

enum class MapKind {
    PommerenkeKn,   // k_n(z) = (i/2n)[((1-iz)/(1+iz))^n - 1]
    HAlpha,         // h_a(z) = (1/2ia)[((1+iz)/(1-iz))^a - 1]
    HarmonicKoebe,  // (z - z^2/2 + z^3/6)/(1-z)^3 + conj((z^2/2 + z^3/6)/(1-z)^3)
    Series,         // truncated power series pair (h, g)
    Affine,         // (f + eps conj f) / (1 + eps g'(0)), optionally unnormalized
    ScaledCombo,    // (base + sign k conj(base)) / (1 + sign k), base analytic
    Koebe,          // renormalized precomposition with a disk automorphism
    AnalyticPart,   // same h, g dropped
};

enum class KoebeNormalization {
    AnalyticDeriv,     // divide by h'(phi(0)) phi'(0)
    DirectionalDeriv,  // divide by d_theta f(phi(0)) |phi'(0)|
};

// First-coefficient convention a map is constructed to satisfy.
enum class NormalizationTag { A1One, A1PlusAm1One, None };

// Structural description of a map: which variant, its parameters, and (for the
// wrapping variants) the base it was built from.  Drives closed-form radius
// recognition and JSON round-tripping.
struct MapDescriptor {
    MapKind kind;
    int n = 0;
    double alpha = 0.0;
    double k = 0.0;
    int sign = 0;
    Complex eps{};
    bool normalize = true;
    Complex a{};
    double theta = 0.0;
    KoebeNormalization koebe_norm = KoebeNormalization::DirectionalDeriv;
    std::vector<Complex> h_coeffs, g_coeffs;  // coefficient of z^{j+1} at index j
    double rho = 0.0;
    std::shared_ptr<const MapDescriptor> base;
};

// A sense-preserving harmonic map f = h + conj(g) on the unit disk (or a
// sub-disk of radius rho for truncated series).  Immutable; cheap to copy.
class HarmonicMap {
public:
    struct Impl;

    static HarmonicMap pommerenke_kn(int n);
    static HarmonicMap h_alpha(double alpha);
    static HarmonicMap harmonic_koebe();
    static HarmonicMap series(std::vector<Complex> h_coeffs, std::vector<Complex> g_coeffs,
                              double rho = 0.95);
    static HarmonicMap identity();  // series h = {1}, g = {}
    static HarmonicMap from_descriptor(const MapDescriptor& d);

    // (this + eps conj(this)) / den, den = 1 + eps g'(0) when normalize is set, else 1.
    HarmonicMap affine_transform(Complex eps, bool normalize = true) const;

    // (this + sign k conj(this)) / (1 + sign k); meant for analytic bases, constant
    // dilatation sign*k.
    HarmonicMap scaled_combo(double k, int sign) const;

    // F(z) = (f(phi(z)) - f(phi(0))) / N with phi(z) = e^{i theta}(z + a)/(1 + conj(a) z).
    HarmonicMap koebe_transform(Complex a, double theta,
                                KoebeNormalization norm = KoebeNormalization::DirectionalDeriv) const;

    // Same analytic part, g dropped.
    HarmonicMap analytic_part() const;

    Complex eval(Complex z) const;          // h(z) + conj(g(z))
    Complex h(Complex z) const;
    Complex g(Complex z) const;
    Complex deriv_h(Complex z) const;
    Complex deriv_g(Complex z) const;
    Complex dilatation(Complex z) const;    // g'(z)/h'(z)
    double jacobian(Complex z) const;       // |h'|^2 - |g'|^2
    Complex directional_derivative(Complex z, double theta) const;

    double domain_radius() const;
    const MapDescriptor& descriptor() const;
    NormalizationTag normalization_tag() const;

    // sup |dilatation| over an n_r x n_theta polar grid up to radius r_max.
    // Exact (grid-free) for constant-dilatation variants.
    double qc_constant(int n_r = 64, int n_theta = 128, double r_max = 0.999) const;

private:
    explicit HarmonicMap(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace hqm
