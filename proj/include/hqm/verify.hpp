#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "hqm/mappings.hpp"
#include "hqm/radii.hpp"

namespace hqm::verify {

enum class CheckStatus { Pass, Fail, Indeterminate };

struct VerificationReport {
    std::string check_name;
    double predicted_lo = 0.0;  // prediction interval; lo == hi for point predictions
    double predicted_hi = 0.0;
    double measured = 0.0;
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::Indeterminate;
    std::map<std::string, std::string> metadata;
};

nlohmann::json report_to_json(const VerificationReport& r);

struct CheckSettings {
    int n_directions = 720;
    radii::RaySettings ray;
};

// Bracket check 1-k <= m(x,Q) <= d_f(z0)/d_h(z0) <= M(x,k) <= 1+k with x = |omega(z0)|/k
// (x = |omega(z0)| when k = 1).  z0 != 0 is handled by Koebe recentering.
VerificationReport check_theorem1(const HarmonicMap& map, Complex z0, double alpha, double Q,
                                  const CheckSettings& cs = {});

// d_f(z0) >= (1 - |omega(z0)|)/(2 alpha) ((1-|z0|)/(1+|z0|))^alpha.
VerificationReport check_theorem2(const HarmonicMap& map, Complex z0, double alpha,
                                  const CheckSettings& cs = {});

// Tangent-turning convexity of theta -> f(z0 + r e^{i theta}) at r = R(z0; alpha, Q):
// arg of the tangent must be nondecreasing with total turning 2 pi.
VerificationReport check_theorem3_convexity(const HarmonicMap& map, Complex z0, double alpha,
                                            double Q, int n_samples = 4096);

// Convexity test at an arbitrary radius (used to probe where convexity breaks).
VerificationReport check_convexity_at_radius(const HarmonicMap& map, Complex z0, double r,
                                             const std::string& name, int n_samples = 4096);

// Ray-lift versus every closed-form sharpness constant:
//   1/(2n), 1/(2n(1-k)), Q/(2n), 1/(2 alpha Q), 1/(2 alpha (1+k)), 1/6, (1-b)/6 (b = k).
std::vector<VerificationReport> run_sharpness_suite(double k, double alpha, int n,
                                                    const CheckSettings& cs = {});

}  // namespace hqm::verify
