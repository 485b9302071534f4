// End-to-end acceptance checks. Prints one line per criterion and exits
// nonzero if any of them fail. argv[1] must be the path to the hqm CLI binary.
#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hqm/bounds.hpp"
#include "hqm/elliptic.hpp"
#include "hqm/mappings.hpp"
#include "hqm/radii.hpp"
#include "hqm/verify.hpp"

namespace {

using hqm::Complex;
using hqm::HarmonicMap;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), p)) > 0) r.output.append(buf, n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::string out;
    if (FILE* f = fopen(path.c_str(), "rb")) {
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof(buf), f)) > 0) out.append(buf, n);
        fclose(f);
    }
    return out;
}

// radius of the first <circle> element in an SVG document
double svg_circle_radius(const std::string& svg) {
    const auto c = svg.find("<circle");
    if (c == std::string::npos) return -1.0;
    const auto r = svg.find(" r=\"", c);
    if (r == std::string::npos) return -1.0;
    return std::strtod(svg.c_str() + r + 4, nullptr);
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    return sum * h / 3.0;
}

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  (%s)\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

// ---------------------------------------------------------------- criterion 1

void criterion1() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;

    const double half_pi = std::numbers::pi / 2.0;
    if (std::abs(hqm::elliptic::phi(1.0 / std::sqrt(2.0)) - half_pi) > 1e-12) {
        ok = false;
        why << "phi(1/sqrt2) off; ";
    }

    double worst_prod = 0.0;
    for (int i = 1; i <= 19; ++i) {
        const double t = i / 20.0;
        const double prod =
            hqm::elliptic::phi(t) * hqm::elliptic::phi(std::sqrt(1.0 - t * t));
        worst_prod = std::max(worst_prod, std::abs(prod - half_pi * half_pi));
    }
    if (worst_prod > 1e-10) {
        ok = false;
        why << "product identity worst=" << worst_prod << "; ";
    }

    double worst_rt = 0.0;
    for (double s = 0.3; s <= 25.0; s *= 1.6) {
        const double back = hqm::elliptic::phi(hqm::elliptic::phi_inv(s));
        worst_rt = std::max(worst_rt, std::abs(back - s) / std::max(1.0, s));
    }
    if (worst_rt > 1e-9) {
        ok = false;
        why << "roundtrip worst=" << worst_rt << "; ";
    }

    const double el = seconds_since(t0);
    if (el >= 1.0) {
        ok = false;
        why << "too slow; ";
    }
    why << "worst product err " << worst_prod << ", roundtrip err " << worst_rt << ", "
        << el << "s";
    report(1, ok, why.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion2() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;

    double worst_M = 0.0;
    for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double x = i / 19.0;
            const double k = j / 19.0;
            const double oracle =
                1.0 + k * simpson([&](double t) { return (t + x) / (1.0 + x * t); }, 0.0,
                                  1.0, 4000);
            worst_M = std::max(worst_M, std::abs(hqm::bounds::upper_bound_M(x, k) - oracle));
        }
    }
    if (worst_M > 1e-10) {
        ok = false;
        why << "M quadrature mismatch " << worst_M << "; ";
    }
    for (double k : {0.0, 0.25, 0.5, 1.0}) {
        if (hqm::bounds::upper_bound_M(1.0, k) != 1.0 + k) ok = false;
        if (hqm::bounds::upper_bound_M(0.0, k) != 1.0 + k / 2.0) ok = false;
    }
    if (std::abs(hqm::bounds::lower_bound_m(0.37, 1.0) - 1.0) > 1e-10) {
        ok = false;
        why << "m(x,1) != 1; ";
    }

    bool bracket_ok = true, mori_ok = true;
    for (int i = 0; i < 15; ++i) {
        for (int j = 0; j < 15; ++j) {
            const double x = i / 14.0;
            const double Q = 1.0 + 4.0 * j / 14.0;
            const double k = hqm::bounds::k_from_q(Q);
            const double m = hqm::bounds::lower_bound_m(x, Q);
            if (!(m >= 1.0 - k - 1e-9 && m <= 1.0 + 1e-9)) bracket_ok = false;
            const double mori = hqm::bounds::mori_upper_bound_on_ratio(x, Q);
            if (!(1.0 / m <= mori + 1e-9 && mori <= 1.0 / (1.0 - k) + 1e-9)) mori_ok = false;
        }
    }
    if (!bracket_ok) {
        ok = false;
        why << "m bracket violated; ";
    }
    if (!mori_ok) {
        ok = false;
        why << "mori chain violated; ";
    }

    const double el = seconds_since(t0);
    if (el >= 30.0) {
        ok = false;
        why << "too slow; ";
    }
    why << "worst M err " << worst_M << ", " << el << "s";
    report(2, ok, why.str());
}

// ---------------------------------------------------------------- criterion 3

struct Family {
    const char* label;
    HarmonicMap map;
    double expected;
};

std::vector<Family> figure_families() {
    const auto f2 = HarmonicMap::pommerenke_kn(2).scaled_combo(0.25, -1);
    const auto p = HarmonicMap::h_alpha(2.0).scaled_combo(0.25, 1);
    return {
        {"h2", f2.analytic_part(), 1.0 / 3.0},
        {"f2", f2, 5.0 / 12.0},
        {"ph", p.analytic_part(), 1.0 / 5.0},
        {"p", p, 3.0 / 20.0},
    };
}

void criterion3() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;
    double worst = 0.0;
    for (const auto& fam : figure_families()) {
        const auto a = hqm::radii::analytic_radius(fam.map);
        if (!a || !close_rel(a->value, fam.expected, 1e-15)) {
            ok = false;
            why << fam.label << " analytic mismatch; ";
        }
        const auto est = hqm::radii::univalent_disk_radius(fam.map, 0.0, 720, true, {});
        const double rel = std::abs(est.value - fam.expected) / fam.expected;
        worst = std::max(worst, rel);
        if (rel > 1e-3) {
            ok = false;
            why << fam.label << " ray-lift rel err " << rel << "; ";
        }
    }
    const double el = seconds_since(t0);
    if (el >= 60.0) {
        ok = false;
        why << "too slow; ";
    }
    why << "worst rel err " << worst << ", " << el << "s";
    report(3, ok, why.str());
}

// ---------------------------------------------------------------- criterion 4

void criterion4() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;

    // sharp edges at the origin
    const auto f2 = HarmonicMap::pommerenke_kn(2).scaled_combo(0.25, -1);
    const auto p = HarmonicMap::h_alpha(2.0).scaled_combo(0.25, 1);
    hqm::radii::RaySettings rs;
    const double upper = hqm::radii::ratio_df_dh(f2, 0.0, 240, rs);
    const double lower = hqm::radii::ratio_df_dh(p, 0.0, 240, rs);
    if (!close_rel(upper, 1.25, 1e-3) || !close_rel(upper, hqm::bounds::upper_bound_M(1.0, 0.25), 1e-3)) {
        ok = false;
        why << "upper edge " << upper << "; ";
    }
    if (!close_rel(lower, 0.75, 1e-3)) {
        ok = false;
        why << "lower edge " << lower << "; ";
    }

    // limits of the bound functions in the degenerate Q = inf case
    const double inf = std::numeric_limits<double>::infinity();
    if (hqm::bounds::upper_bound_M(1.0, 1.0) != 2.0 ||
        hqm::bounds::lower_bound_m(0.4, inf) != 0.0) {
        ok = false;
        why << "Q=inf limits wrong; ";
    }

    // randomized affine deformations of h_alpha
    std::mt19937 rng(20260826);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    hqm::verify::CheckSettings cs;
    cs.n_directions = 120;
    int failures = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const double alpha = (trial % 2 == 0) ? 1.0 : 2.0;
        const double eps_abs = 0.05 + 0.45 * unit(rng);
        const Complex eps = std::polar(eps_abs, 2.0 * std::numbers::pi * unit(rng));
        const auto map = HarmonicMap::h_alpha(alpha).affine_transform(eps);
        const double Q = (1.0 + eps_abs) / (1.0 - eps_abs);
        for (int pt = 0; pt < 5; ++pt) {
            const Complex z0 =
                std::polar(0.5 * unit(rng), 2.0 * std::numbers::pi * unit(rng));
            const auto rep = hqm::verify::check_theorem1(map, z0, alpha, Q, cs);
            if (rep.status != hqm::verify::CheckStatus::Pass) ++failures;
        }
    }
    if (failures > 0) {
        ok = false;
        why << failures << "/100 ratio checks out of bracket; ";
    }
    why << "edges " << upper << "/" << lower << ", " << seconds_since(t0) << "s";
    report(4, ok, why.str());
}

// ---------------------------------------------------------------- criterion 5

void criterion5() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;

    // d(0) = (1-k)/(2 alpha) for the unnormalized h_alpha + k conj(h_alpha);
    // the library's combo divides by 1+k, so rescale its estimate.
    const std::array<std::pair<double, double>, 3> cases = {
        {{1.0, 0.25}, {2.0, 0.25}, {2.0, 0.5}}};
    for (const auto& [alpha, k] : cases) {
        const auto pm = HarmonicMap::h_alpha(alpha).scaled_combo(k, 1);
        const auto est = hqm::radii::univalent_disk_radius(pm, 0.0, 360, true, {});
        const double measured = est.value * (1.0 + k);
        const double expected = (1.0 - k) / (2.0 * alpha);
        if (!close_rel(measured, expected, 1e-3)) {
            ok = false;
            why << "p(" << alpha << "," << k << ") " << measured << " vs " << expected
                << "; ";
        }
    }
    for (double b : {0.0, 0.25, 0.5}) {
        const auto map = HarmonicMap::harmonic_koebe().affine_transform(-b, false);
        const auto est = hqm::radii::univalent_disk_radius(map, 0.0, 360, true, {});
        const double expected = (1.0 - b) / 6.0;
        if (!close_rel(est.value, expected, 1e-3)) {
            ok = false;
            why << "koebe b=" << b << " got " << est.value << "; ";
        }
    }
    why << seconds_since(t0) << "s";
    report(5, ok, why.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion6() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream why;

    for (double a : {1.0, 1.5, 2.0, 4.0, 10.0}) {
        const double r0 = hqm::bounds::convexity_radius_r0(a, 1.0);
        if (!close_rel(r0, a - std::sqrt(a * a - 1.0), 1e-14)) {
            ok = false;
            why << "r0(" << a << ",1) mismatch; ";
        }
    }

    for (const auto& fam : figure_families()) {
        const double Q = (fam.map.descriptor().kind == hqm::MapKind::AnalyticPart)
                             ? 1.0
                             : 5.0 / 3.0;
        for (double z0 : {0.0, 0.3}) {
            const auto rep =
                hqm::verify::check_theorem3_convexity(fam.map, Complex(z0, 0.0), 2.0, Q);
            if (rep.status != hqm::verify::CheckStatus::Pass) {
                ok = false;
                why << fam.label << "@" << z0 << " not convex; ";
            }
        }
    }

    if (!close_rel(hqm::bounds::convexity_radius_at(0.0, 2.0, 5.0 / 3.0),
                   hqm::bounds::convexity_radius_r0(2.0, 5.0 / 3.0), 1e-14)) {
        ok = false;
        why << "R(0) != R0; ";
    }
    double prev = hqm::bounds::convexity_radius_at(0.0, 2.0, 5.0 / 3.0);
    for (int i = 1; i <= 50; ++i) {
        const double r = hqm::bounds::convexity_radius_at(i / 51.0, 2.0, 5.0 / 3.0);
        if (!(r < prev)) {
            ok = false;
            why << "R not decreasing at " << i / 51.0 << "; ";
        }
        prev = r;
    }

    const double el = seconds_since(t0);
    if (el >= 10.0) {
        ok = false;
        why << "too slow; ";
    }
    why << el << "s";
    report(6, ok, why.str());
}

// ---------------------------------------------------------------- criterion 7

void criterion7(const std::string& cli) {
    bool ok = true;
    std::ostringstream why;
    if (cli.empty()) {
        report(7, false, "CLI path not supplied");
        return;
    }

    // determinism: repeated invocations must be byte-identical
    const std::vector<std::string> cmds = {
        cli + " elliptic --phi 0.1 --json",
        cli + " bounds --x 0.5 --q 1.6666666666666667",
        cli + " bounds --x 0.5 --q 3 --grid 5:5 --format csv",
    };
    for (const auto& c : cmds) {
        const auto a = run_cmd(c);
        const auto b = run_cmd(c);
        if (a.exit_code != 0 || a.output != b.output || a.output.empty()) {
            ok = false;
            why << "nondeterministic or failing: " << c << "; ";
        }
    }

    // verify harness on shipped defaults
    const auto ver = run_cmd(cli + " verify --suite all");
    if (ver.exit_code != 0) {
        ok = false;
        why << "verify --suite all exited " << ver.exit_code << "; ";
    }

    // figure presets: overlay radii to 12 digits, byte-identical re-renders
    const std::array<std::pair<const char*, double>, 4> presets = {{{"fig1a", 1.0 / 3.0},
                                                                    {"fig1b", 5.0 / 12.0},
                                                                    {"fig4a", 1.0 / 5.0},
                                                                    {"fig4b", 3.0 / 20.0}}};
    for (const auto& [name, expected] : presets) {
        const std::string out1 = std::string("/tmp/acc_") + name + "_1.svg";
        const std::string out2 = std::string("/tmp/acc_") + name + "_2.svg";
        const auto r1 = run_cmd(cli + " plot --preset " + name + " --out " + out1);
        const auto r2 = run_cmd(cli + " plot --preset " + name + " --out " + out2);
        const std::string s1 = read_file(out1), s2 = read_file(out2);
        if (r1.exit_code != 0 || r2.exit_code != 0 || s1.empty() || s1 != s2) {
            ok = false;
            why << name << " render unstable; ";
            continue;
        }
        const double r = svg_circle_radius(s1);
        if (!close_rel(r, expected, 1e-12)) {
            ok = false;
            why << name << " overlay radius " << r << " vs " << expected << "; ";
        }
    }
    if (ok) why << "deterministic, verify clean, overlays exact";
    report(7, ok, why.str());
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(cli);
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
