#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hqm/bounds.hpp"
#include "hqm/radii.hpp"
#include "oracles.hpp"

using namespace hqm;
using namespace hqm::radii;
using doctest::Approx;

namespace {

RaySettings fast_settings() {
    RaySettings s;
    return s;
}

double boundary_oracle(const HarmonicMap& map, Complex z0, int n = 40000) {
    return oracles::boundary_distance([&](Complex z) { return map.eval(z); }, z0, n);
}

}  // namespace

TEST_CASE("ray lift on the identity") {
    const auto id = HarmonicMap::identity();
    for (double psi : {0.0, 1.0, 2.5, 4.0}) {
        const auto r = ray_lift(id, 0.0, psi);
        CHECK(r.status == RayStatus::Escaped);
        CHECK(r.escape_length == Approx(1.0).epsilon(1e-5));
    }
    // starting off-center toward the nearest boundary point
    const auto r = ray_lift(id, Complex(0.4, 0.0), 0.0);
    CHECK(r.escape_length == Approx(0.6).epsilon(1e-4));
    CHECK_THROWS_AS(ray_lift(id, Complex(1.0, 0.0), 0.0), hqm::DomainError);
}

TEST_CASE("ray lift path samples") {
    RaySettings s;
    s.path_stride = 50;
    const auto r = ray_lift(HarmonicMap::harmonic_koebe(), 0.0, std::numbers::pi);
    CHECK(r.path_samples.empty());
    const auto rp = ray_lift(HarmonicMap::harmonic_koebe(), 0.0, std::numbers::pi, s);
    CHECK(rp.path_samples.size() > 2);
    // the lifted path stays inside the disk and starts at z0
    CHECK(std::abs(rp.path_samples.front()) < 1e-15);
    for (const auto& z : rp.path_samples) CHECK(std::abs(z) < 1.0);
}

TEST_CASE("singular rays are reported") {
    // h = z, g = 2z: J = -3 < 0 everywhere, not locally univalent
    const auto bad = HarmonicMap::series({Complex(1.0)}, {Complex(2.0)});
    const auto r = ray_lift(bad, Complex(0.0, 0.0), 0.0);
    CHECK(r.status == RayStatus::Singular);
    CHECK_THROWS_AS(univalent_disk_radius(bad, 0.0, 8), hqm::DegeneracyError);
}

TEST_CASE("step limit yields a lower bound") {
    RaySettings s;
    s.max_steps = 10;
    const auto est = univalent_disk_radius(HarmonicMap::identity(), 0.0, 8, false, s);
    CHECK(est.lower_bound_only);
    CHECK(est.value < 1.0);
}

TEST_CASE("analytic radius recognition") {
    const auto check = [](const HarmonicMap& m, double expect) {
        const auto a = analytic_radius(m);
        REQUIRE(a.has_value());
        CHECK(a->method == RadiusMethod::Analytic);
        CHECK(a->value == Approx(expect).epsilon(1e-15));
    };
    check(HarmonicMap::pommerenke_kn(2), 0.25);
    check(HarmonicMap::h_alpha(2.0), 0.25);
    check(HarmonicMap::harmonic_koebe(), 1.0 / 6.0);
    check(HarmonicMap::pommerenke_kn(2).scaled_combo(0.25, -1), (5.0 / 3.0) / 4.0);
    check(HarmonicMap::h_alpha(2.0).scaled_combo(0.25, 1), 1.0 / (4.0 * 5.0 / 3.0));
    check(HarmonicMap::pommerenke_kn(2).scaled_combo(0.25, -1).analytic_part(),
          1.0 / (4.0 * 0.75));
    check(HarmonicMap::h_alpha(2.0).scaled_combo(0.25, 1).analytic_part(),
          1.0 / (4.0 * 1.25));
    check(HarmonicMap::harmonic_koebe().affine_transform(-0.5, false), 0.5 / 6.0);
    CHECK(!analytic_radius(HarmonicMap::series({Complex(1.0)}, {})).has_value());
    CHECK(!analytic_radius(HarmonicMap::harmonic_koebe().koebe_transform(0.3, 0.0))
               .has_value());
}

TEST_CASE("ray-lift radius agrees with the boundary-distance oracle at the origin") {
    const HarmonicMap maps[] = {
        HarmonicMap::pommerenke_kn(1),
        HarmonicMap::pommerenke_kn(2),
        HarmonicMap::h_alpha(2.0),
        HarmonicMap::harmonic_koebe(),
        HarmonicMap::pommerenke_kn(2).scaled_combo(0.25, -1),
        HarmonicMap::h_alpha(2.0).scaled_combo(0.25, 1),
    };
    for (const auto& m : maps) {
        const double oracle = boundary_oracle(m, 0.0);
        const auto est = univalent_disk_radius(m, 0.0, 240, true, fast_settings());
        CHECK(est.value == Approx(oracle).epsilon(2e-4));
        CHECK(!est.lower_bound_only);
        // and both match the closed form where one exists
        if (auto a = analytic_radius(m)) {
            CHECK(est.value == Approx(a->value).epsilon(2e-4));
        }
    }
}

TEST_CASE("conformal radius and the order-alpha lower bound") {
    const auto kn = HarmonicMap::pommerenke_kn(2);
    CHECK(conformal_radius(kn, 0.0) == Approx(1.0).epsilon(1e-14));
    CHECK(pommerenke_lower(kn, 0.0, 2.0) == Approx(0.25).epsilon(1e-14));
    // the lower bound is attained by k_n at the origin and never exceeded elsewhere
    for (double r : {0.0, 0.2, 0.4, 0.6}) {
        const Complex z(r, 0.0);
        const double d = radius_at(kn, z, 240, fast_settings(), false).value;
        CHECK(d >= pommerenke_lower(kn, z, 2.0) - 2e-4);
    }
    CHECK_THROWS_AS(pommerenke_lower(kn, 0.0, 0.5), hqm::DomainError);
}

TEST_CASE("off-center radius via recentering matches the boundary-distance oracle") {
    struct Case { HarmonicMap map; Complex z0; };
    const Case cases[] = {
        {HarmonicMap::harmonic_koebe(), Complex(0.3, 0.0)},
        {HarmonicMap::pommerenke_kn(2), Complex(0.2, 0.25)},
        {HarmonicMap::h_alpha(2.0).scaled_combo(0.25, 1), Complex(-0.1, 0.3)},
    };
    for (const auto& c : cases) {
        const double oracle = boundary_oracle(c.map, c.z0);
        const auto est = radius_at(c.map, c.z0, 240, fast_settings());
        CHECK(est.value == Approx(oracle).epsilon(5e-4));
    }
}

TEST_CASE("radius_at prefers the closed form at the origin") {
    const auto est = radius_at(HarmonicMap::harmonic_koebe(), 0.0);
    CHECK(est.method == RadiusMethod::Analytic);
    CHECK(est.value == Approx(1.0 / 6.0));
}

TEST_CASE("d_f/d_h ratio") {
    // purely analytic map: the ratio is exactly 1
    CHECK(ratio_df_dh(HarmonicMap::pommerenke_kn(2), 0.0, 120) == Approx(1.0).epsilon(1e-9));
    // f_n combo at the origin: d_f/d_h = (Q/2n) / (1/(2n(1-k))) = Q(1-k) = 1+k
    const auto fn = HarmonicMap::pommerenke_kn(2).scaled_combo(0.25, -1);
    CHECK(ratio_df_dh(fn, 0.0, 120) == Approx(1.25).epsilon(1e-9));
    // p combo: (1/(2 alpha Q)) / (1/(2 alpha (1+k))) = (1+k)/Q = 1-k
    const auto p = HarmonicMap::h_alpha(2.0).scaled_combo(0.25, 1);
    CHECK(ratio_df_dh(p, 0.0, 120) == Approx(0.75).epsilon(1e-9));
    // off-center, the ratio obeys the m/M bracket
    const double x = std::abs(fn.dilatation(Complex(0.3, 0.1))) / 0.25;
    const double ratio = ratio_df_dh(fn, Complex(0.3, 0.1), 240, fast_settings());
    CHECK(ratio >= hqm::bounds::lower_bound_m(x, 5.0 / 3.0) - 1e-3);
    CHECK(ratio <= hqm::bounds::upper_bound_M(x, 0.25) + 1e-3);
}
