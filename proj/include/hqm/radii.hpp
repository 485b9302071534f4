#pragma once

#include <optional>
#include <vector>

#include "hqm/mappings.hpp"

namespace hqm::radii {

enum class RayStatus { Escaped, StepLimit, Singular };

struct RaySettings {
    double step_factor = 0.1;     // c in h = min(h_max, c (R-|z|) J / (|h'|+|g'|))
    double h_max = 1e-3;
    double delta = 1e-6;          // escape threshold: |z| >= R - delta
    long max_steps = 10'000'000;
    int path_stride = 0;          // keep every n-th point of the lifted path; 0 = none
    bool parallel = true;         // sweep directions concurrently
};

struct RayLift {
    double direction = 0.0;       // image-ray angle psi
    double escape_length = 0.0;   // image arc length s* at escape (lower bound otherwise)
    std::vector<Complex> path_samples;
    RayStatus status = RayStatus::Escaped;
};

enum class RadiusMethod { Analytic, RayLift, BoundaryDistance };

struct RadiusEstimate {
    double value = 0.0;
    RadiusMethod method = RadiusMethod::RayLift;
    double error = 0.0;
    int directions_used = 0;
    bool lower_bound_only = false;  // every ray hit the step limit
};

// Lift the straight image ray f(z0) + s e^{i psi} back into the disk by integrating
// dz/ds = (conj(h') e^{i psi} - conj(g') e^{-i psi}) / J_f   (classical RK4, adaptive step)
// until |z| reaches the escape threshold or the step limit.
RayLift ray_lift(const HarmonicMap& map, Complex z0, double psi, const RaySettings& s = {});

// min over n_directions uniformly spaced psi of the ray escape length, with
// golden-section refinement around the argmin (angular tolerance 1e-5).
RadiusEstimate univalent_disk_radius(const HarmonicMap& map, Complex z0,
                                     int n_directions = 720, bool refine = true,
                                     const RaySettings& s = {});

// Exact closed-form d(0) for the recognized extremal variants; nullopt otherwise.
std::optional<RadiusEstimate> analytic_radius(const HarmonicMap& map);

// |h'(z)| (1 - |z|^2) and that value over 2 alpha.
double conformal_radius(const HarmonicMap& map, Complex z);
double pommerenke_lower(const HarmonicMap& map, Complex z, double alpha);

// d_f(z0) / d_h(z0); analytic values when both sides are recognized, ray-lift otherwise.
double ratio_df_dh(const HarmonicMap& map, Complex z0, int n_directions = 720,
                   const RaySettings& s = {});

// d_f at an off-center point via Koebe recentering:
//   d_f(z0) = d_F(0) |d_theta f(z0)| (1 - |z0|^2),  F the recentered map.
RadiusEstimate radius_at(const HarmonicMap& map, Complex z0, int n_directions = 720,
                         const RaySettings& s = {}, bool prefer_analytic = true);

}  // namespace hqm::radii
