#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hqm/elliptic.hpp"
#include "oracles.hpp"

using namespace hqm::elliptic;
constexpr double kPi = std::numbers::pi;

TEST_CASE("agm fixed points and reference value") {
    CHECK(agm(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(agm(2.5, 2.5) == doctest::Approx(2.5).epsilon(1e-15));
    // iterating the AGM recurrence by hand: agm(1, sqrt(2))
    CHECK(agm(1.0, std::sqrt(2.0)) == doctest::Approx(1.1981402347355922).epsilon(1e-12));
    CHECK(agm(3.0, 7.0) == doctest::Approx(agm(7.0, 3.0)).epsilon(1e-15));
    CHECK_THROWS_AS(agm(0.0, 1.0), hqm::DomainError);
    CHECK_THROWS_AS(agm(1.0, -2.0), hqm::DomainError);
}

TEST_CASE("ellip_k reference values and errors") {
    CHECK(ellip_k(0.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(ellip_k(1.0 / std::sqrt(2.0)) == doctest::Approx(1.854074677301372).epsilon(1e-13));
    CHECK(ellip_k(0.5) == doctest::Approx(1.685750354812596).epsilon(1e-13));
    CHECK_THROWS_AS(ellip_k(1.0), hqm::DivergenceError);
    CHECK_THROWS_AS(ellip_k(-0.1), hqm::DomainError);
    CHECK_THROWS_AS(ellip_k(1.5), hqm::DomainError);
}

TEST_CASE("ellip_k agrees with the quadrature oracle on a grid") {
    for (int i = 0; i <= 45; ++i) {
        const double t = 0.02 * i;
        CHECK(ellip_k(t) == doctest::Approx(oracles::ellip_k_quadrature(t)).epsilon(1e-10));
    }
}

TEST_CASE("ellip_k_comp") {
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(ellip_k_comp(s) == doctest::Approx(ellip_k(s)).epsilon(1e-14));
    CHECK(ellip_k_comp(1.0) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(ellip_k_comp(0.6) == doctest::Approx(ellip_k(0.8)).epsilon(1e-14));
    CHECK_THROWS_AS(ellip_k_comp(0.0), hqm::DivergenceError);
}

TEST_CASE("phi special values") {
    CHECK(phi(1.0 / std::sqrt(2.0)) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
    // quadrature oracle plus small-t asymptote log(4/t)
    CHECK(phi(0.1) == doctest::Approx(3.6863692375528519).epsilon(1e-12));
    CHECK(phi(0.1) == doctest::Approx(oracles::phi_quadrature(0.1)).epsilon(1e-9));
    CHECK(phi(0.1) == doctest::Approx(std::log(40.0)).epsilon(3e-3));
    CHECK_THROWS_AS(phi(0.0), hqm::DivergenceError);
    CHECK_THROWS_AS(phi(1.0), hqm::DivergenceError);
    CHECK_THROWS_AS(phi(1e-13), hqm::DivergenceError);
}

TEST_CASE("phi complementary product identity") {
    for (int i = 1; i <= 19; ++i) {
        const double t = 0.05 * i;
        const double product = phi(t) * phi(std::sqrt(1.0 - t * t));
        CHECK(product == doctest::Approx(kPi * kPi / 4.0).epsilon(1e-11));
    }
}

TEST_CASE("monotonicity on a 200-point grid") {
    double prev_k = ellip_k(0.0);
    double prev_phi = phi(1e-3);
    for (int i = 1; i <= 200; ++i) {
        const double t = 1e-3 + (0.998 - 1e-3) * i / 200.0;
        const double kk = ellip_k(t);
        const double ph = phi(t);
        CHECK(kk > prev_k);
        CHECK(ph < prev_phi);
        prev_k = kk;
        prev_phi = ph;
    }
}

TEST_CASE("phi_inv") {
    CHECK(phi_inv(kPi / 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(phi_inv(phi(0.3)) == doctest::Approx(0.3).epsilon(1e-10));
    // bisection oracle on the quadrature phi (moderate s where Simpson is sound)
    const double t2 = oracles::bisect_decreasing([](double t) { return oracles::phi_quadrature(t); },
                                                 2.0, 1e-3, 0.99);
    CHECK(phi_inv(2.0) == doctest::Approx(t2).epsilon(1e-7));
    // frozen 30-digit reference plus the asymptote 4 e^{-10}
    CHECK(phi_inv(10.0) == doctest::Approx(1.81599717552720e-4).epsilon(1e-9));
    CHECK(phi_inv(10.0) == doctest::Approx(4.0 * std::exp(-10.0)).epsilon(1e-4));
    CHECK_THROWS_AS(phi_inv(0.0), hqm::DomainError);
    CHECK_THROWS_AS(phi_inv(-1.0), hqm::DomainError);
}

TEST_CASE("phi_inv roundtrip on a log grid") {
    // below s ~ 0.19 the inverse is closer to 1 than one double ulp, so start
    // the grid where the roundtrip is representable
    for (double s = 0.3; s <= 25.0; s *= 1.35) {
        const double t = phi_inv(s);
        CHECK(std::abs(phi(t) - s) < 1e-9 * std::max(1.0, s));
    }
}
